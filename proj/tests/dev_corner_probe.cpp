// Development probe for the corner-mode HU construction.  Not part of the
// test suite.

#include "phistar/corner_modes.hpp"
#include "phistar/graph_io.hpp"

#include <iostream>

using namespace phistar;

static RibbonGraph mk(const std::string& text) {
    return RibbonGraph::build(parse_graph_text(text));
}

static std::string hu_str(const HUPolynomial& hu) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : hu.terms) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (m.s_pow) os << "*s^" << m.s_pow;
        for (size_t l = 0; l < hu.L; ++l)
            if (m.t_exp[l]) os << "*t" << (l + 1) << "^" << m.t_exp[l];
    }
    return os.str();
}

static void probe(const std::string& name, const RibbonGraph& g) {
    std::cout << "=== " << name << "  (N=" << g.num_vertices() << " L=" << g.num_lines()
              << " Ne=" << g.num_externals() << ")\n";
    TopologyReport tr = topology(g);
    std::cout << "    F=" << tr.F << " B=" << tr.B << " g=" << tr.g << " omega=" << tr.omega.str()
              << "\n";
    try {
        HUPolynomial hu = hu_extract(g);
        std::cout << "    HU = " << hu_str(hu) << "\n";
        auto pairs = admissible_pairs(g);
        auto rep = leading_term_check(g, hu, pairs);
        std::cout << "    admissible pairs: " << pairs.size()
                  << "  leading-term check: " << (rep.ok ? "OK" : "MISMATCH") << "\n";
        if (!rep.ok)
            for (const auto& mm : rep.mismatches) {
                std::cout << "      J={";
                for (int l : mm.pair.J) std::cout << l << ",";
                std::cout << "} expect " << mm.pair.coefficient.str() << "*s^" << mm.pair.s_power
                          << " got " << mm.found.str() << "\n";
            }
        // per-line min degrees and total min degree (b' data)
        std::vector<int> all;
        for (int l = 0; l < static_cast<int>(g.num_lines()); ++l) all.push_back(l);
        std::cout << "    min total t-degree (b' of full graph): " << hu.min_degree_over_lines(all)
                  << "\n";
        for (int l = 0; l < static_cast<int>(g.num_lines()); ++l)
            std::cout << "    b'({line" << l + 1 << "}) = " << hu.min_degree_over_lines({l}) << "\n";
    } catch (const std::exception& e) {
        std::cout << "    FAILED: " << e.what() << "\n";
    }
}

int main() {
    probe("bare vertex", mk(R"(vertex v : a b c d
external a b c d
root v)"));

    probe("planar tadpole", mk(R"(vertex v : a b c d
line a b
external c d
root v)"));

    probe("crossed tadpole", mk(R"(vertex v : a b c d
line a c
external b d
root v)"));

    probe("vacuum double tadpole (crossing, g=1)", mk(R"(vertex v : a b c d
line a c
line b d
root v)"));

    probe("vacuum double tadpole (planar)", mk(R"(vertex v : a b c d
line a b
line c d
root v)"));

    probe("bubble B=1", mk(R"(vertex v : a b c d
vertex u : e f g h
line a f
line b e
external c d g h
root v)"));

    probe("bubble B=2", mk(R"(vertex v : a b c d
vertex u : e f g h
line a e
line b f
external c d g h
root v)"));

    probe("complex-legal vacuum g=1 (N=2, L=4)", mk(R"(vertex v : a b c d
vertex u : e f g h
line a f
line b g
line c h
line d e
root v)"));
    return 0;
}
