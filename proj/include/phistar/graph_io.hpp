#pragma once

// Text format for graph descriptions, one graph per document:
//
//   # comment
//   vertex v1 : a b c d
//   line a b
//   external c d
//   root v1
//
// The serializer is canonical (single spaces, declaration order, externals
// sorted by name), so serialize(parse(serialize(x))) is byte-identical.

#include "phistar/ribbon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace phistar {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline GraphSpec parse_graph_text(const std::string& text) {
    GraphSpec spec;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_root = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto fail = [&](const std::string& msg) -> void {
            throw ParseError("line " + std::to_string(lineno) + ": " + msg);
        };
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "vertex") {
            VertexSpec v;
            if (!(ls >> v.name)) fail("vertex needs a name");
            std::string colon;
            if (!(ls >> colon) || colon != ":") fail("expected ':' after vertex name");
            for (int i = 0; i < 4; ++i)
                if (!(ls >> v.corners[i])) fail("vertex " + v.name + " needs 4 half-edges");
            std::string extra;
            if (ls >> extra) fail("vertex " + v.name + " has more than 4 half-edges");
            spec.vertices.push_back(v);
        } else if (kw == "line") {
            std::string a, b, extra;
            if (!(ls >> a >> b)) fail("line needs two half-edges");
            if (ls >> extra) fail("line takes exactly two half-edges");
            spec.lines.emplace_back(a, b);
        } else if (kw == "external") {
            std::string e;
            bool any = false;
            while (ls >> e) {
                spec.externals.push_back(e);
                any = true;
            }
            if (!any) fail("external needs at least one half-edge");
        } else if (kw == "root") {
            if (!(ls >> spec.root)) fail("root needs a vertex name");
            saw_root = true;
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    if (!saw_root) throw ParseError("missing 'root' declaration");
    return spec;
}

inline std::string serialize_graph(const GraphSpec& spec) {
    std::ostringstream os;
    for (const auto& v : spec.vertices) {
        os << "vertex " << v.name << " :";
        for (const auto& c : v.corners) os << " " << c;
        os << "\n";
    }
    for (const auto& [a, b] : spec.lines) os << "line " << a << " " << b << "\n";
    if (!spec.externals.empty()) {
        auto ext = spec.externals;
        std::sort(ext.begin(), ext.end());
        os << "external";
        for (const auto& e : ext) os << " " << e;
        os << "\n";
    }
    os << "root " << spec.root << "\n";
    return os.str();
}

inline RibbonGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return RibbonGraph::build(parse_graph_text(ss.str()));
}

}  // namespace phistar
