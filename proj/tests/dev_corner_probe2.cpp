// Probe 2: bubble raw polynomials and a genus-1 graph with externals.

#include "phistar/corner_modes.hpp"
#include "phistar/graph_io.hpp"

#include <iostream>

using namespace phistar;

static RibbonGraph mk(const std::string& text) {
    return RibbonGraph::build(parse_graph_text(text));
}

static void raw_probe(const std::string& name, const RibbonGraph& g) {
    std::cout << "=== " << name << "\n";
    TopologyReport tr = topology(g);
    std::cout << "    N=" << tr.N << " L=" << tr.L << " Ne=" << tr.N_e << " F=" << tr.F
              << " B=" << tr.B << " g=" << tr.g << "\n";
    Poly raw = hu_raw_omega(g);
    const size_t L = g.num_lines();
    std::vector<std::string> names;
    for (size_t l = 0; l < L; ++l) names.push_back("t" + std::to_string(l + 1));
    names.push_back("w");
    std::cout << "    raw(t, w=Omega) = " << raw.str(names) << "\n";
    auto pairs = admissible_pairs(g);
    std::cout << "    admissible J's (k, s_pow):";
    for (auto& p : pairs) {
        std::cout << " {";
        for (int l : p.J) std::cout << l;
        std::cout << "}k=" << p.k << ",s^" << p.s_power;
    }
    std::cout << "\n";
}

int main() {
    raw_probe("bubble B=1", mk(R"(vertex v : a b c d
vertex u : e f g h
line a f
line b e
external c d g h
root v)"));

    raw_probe("g=1 with externals (N=3, L=5)", mk(R"(vertex v : a b c d
vertex w : e f g h
vertex u : p q r x
line a f
line b g
line c h
line d p
line q e
external r x
root v)"));
    return 0;
}
