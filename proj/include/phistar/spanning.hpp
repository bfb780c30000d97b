#pragma once

// Spanning-structure enumeration for the direct graph and its dual, plus the
// matrix-tree determinant used as an independent count oracle.

#include "phistar/matrix.hpp"
#include "phistar/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace phistar {

// A multigraph given by node count and edge endpoint pairs (self-loops
// allowed; they can never enter a tree).
struct Multigraph {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;
};

inline Multigraph direct_multigraph(const RibbonGraph& g) {
    Multigraph m;
    m.nodes = static_cast<int>(g.num_vertices());
    for (const auto& [a, b] : g.lines())
        m.edges.emplace_back(g.vertex_of(a), g.vertex_of(b));
    return m;
}

inline Multigraph dual_multigraph(const RibbonGraph& g) {
    DualGraph d = dual_graph(g);
    Multigraph m;
    m.nodes = d.num_faces;
    m.edges = d.lines;
    return m;
}

namespace detail {
struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};
}  // namespace detail

// All spanning trees as sorted edge-index sets, in lexicographic order.
// For a single-node graph the unique spanning tree is the empty set.
inline std::vector<std::vector<int>> spanning_trees(const Multigraph& m) {
    std::vector<std::vector<int>> out;
    const int need = m.nodes - 1;
    if (need < 0) return out;
    if (need == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> pick;
    // Lexicographic subsets of size `need` with acyclicity pruning.
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == need) {
            detail::UnionFind uf(m.nodes);
            for (int e : pick)
                if (!uf.unite(m.edges[e].first, m.edges[e].second)) return;
            out.push_back(pick);
            return;
        }
        for (int e = start; e < static_cast<int>(m.edges.size()); ++e) {
            if (m.edges[e].first == m.edges[e].second) continue;
            pick.push_back(e);
            rec(e + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

// Kirchhoff count: determinant of the reduced Laplacian (exact rational).
inline BigInt matrix_tree_count(const Multigraph& m) {
    if (m.nodes <= 0) return 0;
    if (m.nodes == 1) return 1;
    const int n = m.nodes - 1;
    Matrix<Rat> lap(n, n, Rat(0));
    for (const auto& [a, b] : m.edges) {
        if (a == b) continue;
        if (a < n) lap(a, a) += 1;
        if (b < n) lap(b, b) += 1;
        if (a < n && b < n) {
            lap(a, b) -= 1;
            lap(b, a) -= 1;
        }
    }
    Rat d = det(lap);
    if (den(d) != 1) throw std::logic_error("matrix-tree determinant is not an integer");
    return num(d);
}

struct SpanningStructures {
    std::vector<std::vector<int>> direct_trees;  // line-index sets
    std::vector<std::vector<int>> dual_trees;    // line-index sets
};

inline SpanningStructures spanning_structures(const RibbonGraph& g) {
    SpanningStructures s;
    s.direct_trees = spanning_trees(direct_multigraph(g));
    s.dual_trees = spanning_trees(dual_multigraph(g));
    return s;
}

}  // namespace phistar
