#pragma once

// Ribbon graphs of the phi^4 model: vertices carry four cyclically ordered
// half-edges ("darts"), internal lines pair darts, unpaired darts are
// external legs, and one vertex is the marked root.
//
// Faces are traced on the amputated graph: external darts are removed from
// the rotation but their corner positions stay recorded, and a traced face
// is "broken" when it sweeps at least one such corner.

#include "phistar/rational.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace phistar {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VertexSpec {
    std::string name;
    std::array<std::string, 4> corners;
};

struct GraphSpec {
    std::vector<VertexSpec> vertices;
    std::vector<std::pair<std::string, std::string>> lines;
    std::vector<std::string> externals;
    std::string root;
};

class RibbonGraph {
public:
    struct Vertex {
        std::string name;
        std::array<int, 4> corners;  // dart indices in cyclic order
    };

    static RibbonGraph build(const GraphSpec& spec);

    size_t num_vertices() const { return vertices_.size(); }
    size_t num_lines() const { return lines_.size(); }
    size_t num_externals() const { return externals_.size(); }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& lines() const { return lines_; }
    const std::vector<int>& externals() const { return externals_; }
    int root() const { return root_; }

    const std::string& dart_name(int d) const { return dart_names_.at(d); }
    int dart_count() const { return static_cast<int>(dart_names_.size()); }
    int vertex_of(int dart) const { return dart_vertex_.at(dart); }
    int corner_of(int dart) const { return dart_corner_.at(dart); }
    int line_of(int dart) const { return dart_line_.at(dart); }      // -1 for externals
    int partner_of(int dart) const { return dart_partner_.at(dart); }  // -1 for externals
    bool is_external(int dart) const { return dart_line_.at(dart) < 0; }
    int dart_index(const std::string& name) const {
        auto it = dart_index_.find(name);
        if (it == dart_index_.end()) throw GraphError("unknown half-edge: " + name);
        return it->second;
    }
    int dart_at(int vertex, int corner) const { return vertices_.at(vertex).corners.at(corner); }

    GraphSpec to_spec() const;

private:
    std::vector<std::string> dart_names_;
    std::map<std::string, int> dart_index_;
    std::vector<Vertex> vertices_;
    std::vector<std::pair<int, int>> lines_;
    std::vector<int> externals_;
    int root_ = 0;

    std::vector<int> dart_vertex_, dart_corner_, dart_line_, dart_partner_;

    friend struct FaceTracer;
};

struct TopologyReport {
    int N = 0, L = 0, N_e = 0, F = 0, B = 0, g = 0;
    Rat omega;
    bool divergent = false;
    bool coincidence_checked = false;  // power-counting vs topological class
};

struct Face {
    std::vector<int> darts;              // face orbit, internal darts
    std::vector<int> swept_externals;    // external darts on this face
    bool broken = false;
};

struct FaceSet {
    std::vector<Face> faces;
    std::vector<int> dart_face;      // internal dart -> face index
    std::vector<int> external_face;  // external dart -> face index
};

struct SubgraphSlice {
    std::vector<int> lines;  // kept line indices, sorted
    int L = 0;               // kept lines
    int n = 0;               // vertices touched
    int c = 0;               // connected components
    int F = 0;
    int B = 0;
    int g = 0;
};

// ---------------------------------------------------------------------------

inline RibbonGraph RibbonGraph::build(const GraphSpec& spec) {
    RibbonGraph g;
    if (spec.vertices.empty()) throw GraphError("graph has no vertices");

    std::set<std::string> vnames;
    for (const auto& v : spec.vertices) {
        if (!vnames.insert(v.name).second) throw GraphError("duplicate vertex name: " + v.name);
        Vertex vv;
        vv.name = v.name;
        for (int i = 0; i < 4; ++i) {
            const std::string& dn = v.corners[i];
            if (dn.empty()) throw GraphError("vertex " + v.name + " has fewer than 4 corners");
            if (g.dart_index_.count(dn))
                throw GraphError("half-edge used in more than one corner: " + dn);
            int idx = static_cast<int>(g.dart_names_.size());
            g.dart_index_[dn] = idx;
            g.dart_names_.push_back(dn);
            vv.corners[i] = idx;
        }
        g.vertices_.push_back(vv);
    }

    const int nd = g.dart_count();
    g.dart_vertex_.assign(nd, -1);
    g.dart_corner_.assign(nd, -1);
    g.dart_line_.assign(nd, -1);
    g.dart_partner_.assign(nd, -1);
    for (size_t v = 0; v < g.vertices_.size(); ++v)
        for (int i = 0; i < 4; ++i) {
            g.dart_vertex_[g.vertices_[v].corners[i]] = static_cast<int>(v);
            g.dart_corner_[g.vertices_[v].corners[i]] = i;
        }

    for (const auto& [an, bn] : spec.lines) {
        int a = g.dart_index(an), b = g.dart_index(bn);
        if (a == b) throw GraphError("line pairs a half-edge with itself: " + an);
        if (g.dart_line_[a] >= 0) throw GraphError("half-edge in two lines: " + an);
        if (g.dart_line_[b] >= 0) throw GraphError("half-edge in two lines: " + bn);
        int idx = static_cast<int>(g.lines_.size());
        g.lines_.emplace_back(a, b);
        g.dart_line_[a] = g.dart_line_[b] = idx;
        g.dart_partner_[a] = b;
        g.dart_partner_[b] = a;
    }

    std::set<int> extset;
    for (const auto& en : spec.externals) {
        int e = g.dart_index(en);
        if (g.dart_line_[e] >= 0)
            throw GraphError("half-edge in line and external: " + en);
        if (!extset.insert(e).second) throw GraphError("duplicate external: " + en);
    }
    g.externals_.assign(extset.begin(), extset.end());

    for (int d = 0; d < nd; ++d)
        if (g.dart_line_[d] < 0 && !extset.count(d))
            throw GraphError("half-edge neither paired nor external: " + g.dart_names_[d]);

    if (spec.root.empty()) throw GraphError("missing root vertex");
    g.root_ = -1;
    for (size_t v = 0; v < g.vertices_.size(); ++v)
        if (g.vertices_[v].name == spec.root) g.root_ = static_cast<int>(v);
    if (g.root_ < 0) throw GraphError("root is not a vertex: " + spec.root);

    // Connectivity through internal lines.
    std::vector<int> comp(g.vertices_.size(), -1);
    std::vector<size_t> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        for (int i = 0; i < 4; ++i) {
            int d = g.vertices_[v].corners[i];
            int p = g.dart_partner_[d];
            if (p < 0) continue;
            int w = g.dart_vertex_[p];
            if (comp[w] < 0) {
                comp[w] = 0;
                stack.push_back(w);
            }
        }
    }
    for (size_t v = 0; v < g.vertices_.size(); ++v)
        if (comp[v] < 0) throw GraphError("graph is disconnected (vertex " + g.vertices_[v].name + ")");

    if ((void)0, 4 * g.num_vertices() - g.num_externals() != 2 * g.num_lines())
        throw GraphError("corner bookkeeping violates 4N - N_e = 2L");
    return g;
}

inline GraphSpec RibbonGraph::to_spec() const {
    GraphSpec s;
    for (const auto& v : vertices_) {
        VertexSpec vs;
        vs.name = v.name;
        for (int i = 0; i < 4; ++i) vs.corners[i] = dart_names_[v.corners[i]];
        s.vertices.push_back(vs);
    }
    for (const auto& [a, b] : lines_) s.lines.emplace_back(dart_names_[a], dart_names_[b]);
    for (int e : externals_) s.externals.push_back(dart_names_[e]);
    s.root = vertices_[root_].name;
    return s;
}

// Face tracing on the amputated graph, optionally restricted to a line
// subset.  phi = sigma . alpha where sigma skips non-kept darts; corners
// skipped during a sigma step are swept onto the face being traced.
struct FaceTracer {
    // keep[line] selects the sub-map; vertices with no kept dart are ignored.
    static FaceSet trace(const RibbonGraph& g, const std::vector<bool>& keep_line) {
        FaceSet fs;
        const int nd = g.dart_count();
        fs.dart_face.assign(nd, -1);
        fs.external_face.assign(nd, -1);

        auto kept = [&](int d) {
            int l = g.line_of(d);
            return l >= 0 && keep_line[static_cast<size_t>(l)];
        };

        std::vector<int> visited(nd, 0);
        for (int d0 = 0; d0 < nd; ++d0) {
            if (!kept(d0) || visited[d0]) continue;
            Face face;
            int d = d0;
            do {
                visited[d] = 1;
                face.darts.push_back(d);
                fs.dart_face[d] = static_cast<int>(fs.faces.size());
                int p = g.partner_of(d);
                // sigma step from p, sweeping skipped corners.
                int v = g.vertex_of(p);
                int i = g.corner_of(p);
                int next = -1;
                for (int step = 1; step <= 4; ++step) {
                    int cand = g.dart_at(v, (i + step) % 4);
                    if (kept(cand)) {
                        next = cand;
                        break;
                    }
                    face.swept_externals.push_back(cand);
                    fs.external_face[cand] = static_cast<int>(fs.faces.size());
                }
                if (next < 0) throw GraphError("face trace lost its way (internal error)");
                d = next;
            } while (d != d0);
            face.broken = false;
            for (int e : face.swept_externals)
                if (g.is_external(e)) face.broken = true;
            fs.faces.push_back(std::move(face));
        }
        return fs;
    }

    static FaceSet trace_all(const RibbonGraph& g) {
        return trace(g, std::vector<bool>(g.num_lines(), true));
    }
};

// Swept corners of a slice that count as leg positions: original externals
// plus hooks of removed lines.
inline bool slice_corner_breaks(const RibbonGraph& g, const std::vector<bool>& keep_line, int dart) {
    int l = g.line_of(dart);
    return l < 0 || !keep_line[static_cast<size_t>(l)];
}

inline SubgraphSlice subgraph_slice(const RibbonGraph& g, const std::vector<int>& kept_lines) {
    SubgraphSlice s;
    s.lines = kept_lines;
    std::sort(s.lines.begin(), s.lines.end());
    s.L = static_cast<int>(s.lines.size());
    if (s.L == 0) return s;

    std::vector<bool> keep(g.num_lines(), false);
    for (int l : s.lines) keep.at(static_cast<size_t>(l)) = true;

    std::set<int> touched;
    for (int l : s.lines) {
        touched.insert(g.vertex_of(g.lines()[l].first));
        touched.insert(g.vertex_of(g.lines()[l].second));
    }
    s.n = static_cast<int>(touched.size());

    // components over touched vertices via kept lines
    std::map<int, int> comp;
    for (int v : touched) comp[v] = -1;
    int nc = 0;
    for (int v : touched) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = nc;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (int i = 0; i < 4; ++i) {
                int d = g.dart_at(w, i);
                int l = g.line_of(d);
                if (l < 0 || !keep[static_cast<size_t>(l)]) continue;
                int u = g.vertex_of(g.partner_of(d));
                if (comp[u] < 0) {
                    comp[u] = nc;
                    stack.push_back(u);
                }
            }
        }
        ++nc;
    }
    s.c = nc;

    FaceSet fs = FaceTracer::trace(g, keep);
    s.F = static_cast<int>(fs.faces.size());
    int broken = 0;
    for (const auto& f : fs.faces) {
        bool b = false;
        for (int e : f.swept_externals)
            if (slice_corner_breaks(g, keep, e)) b = true;
        broken += b ? 1 : 0;
    }
    s.B = broken;

    // n - L + F = 2c - 2g summed over components
    int twog = 2 * s.c - (s.n - s.L + s.F);
    if (twog < 0 || twog % 2 != 0)
        throw GraphError("slice Euler relation produced non-integer genus (internal error)");
    s.g = twog / 2;
    return s;
}

inline TopologyReport topology(const RibbonGraph& g) {
    TopologyReport r;
    r.N = static_cast<int>(g.num_vertices());
    r.L = static_cast<int>(g.num_lines());
    r.N_e = static_cast<int>(g.num_externals());

    if (r.L == 0) {
        // Bare vertex: the trivial rosette.
        r.F = 1;
        r.B = 1;
        r.g = 0;
    } else {
        FaceSet fs = FaceTracer::trace_all(g);
        r.F = static_cast<int>(fs.faces.size());
        for (const auto& f : fs.faces) r.B += f.broken ? 1 : 0;
        int twog = 2 - (r.N - r.L + r.F);
        if (twog < 0 || twog % 2 != 0)
            throw GraphError("Euler relation produced non-integer genus (internal error)");
        r.g = twog / 2;
    }

    r.omega = Rat(2) - Rat(r.N_e, 2) - Rat(2) * Rat(2 * r.g + r.B - 1);
    r.divergent = r.omega >= 0;

    // The divergence dichotomy of the model holds for graphs with external
    // legs; vacuum graphs fall outside it.
    if (r.N_e >= 2) {
        bool planar_regular_small = (r.g == 0 && r.B == 1 && (r.N_e == 2 || r.N_e == 4));
        if (r.divergent != planar_regular_small)
            throw GraphError("power counting disagrees with topological classification (internal error)");
        r.coincidence_checked = true;
    }
    return r;
}

enum class DivergenceClass { divergent, convergent };

inline DivergenceClass classify(const TopologyReport& r) {
    return r.divergent ? DivergenceClass::divergent : DivergenceClass::convergent;
}

// Dual map: one node per traced face, same line set; line l joins the faces
// its two darts lie on (possibly the same face).
struct DualGraph {
    int num_faces = 0;
    std::vector<std::pair<int, int>> lines;  // per original line: faces it borders
};

inline DualGraph dual_graph(const RibbonGraph& g) {
    DualGraph d;
    if (g.num_lines() == 0) {
        d.num_faces = 1;
        return d;
    }
    FaceSet fs = FaceTracer::trace_all(g);
    d.num_faces = static_cast<int>(fs.faces.size());
    for (const auto& [a, b] : g.lines())
        d.lines.emplace_back(fs.dart_face[a], fs.dart_face[b]);
    return d;
}

}  // namespace phistar
