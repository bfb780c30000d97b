#pragma once

// Matrix-base (corner-mode) Gaussian of a graph amplitude, one 2-plane of
// the 4d problem.  Every corner carries one complex mode variable; vertices
// are traces over their four corner operators, so corner c's kernel
// arguments are (conj v_c, v_{next(c)}).
//
// An internal line {c, c'} with parameter t contributes
//
//   exp[ G1 (vb_c v_{n(c)} + vb_{c'} v_{n(c')})
//      + G0 (vb_c v_{n(c')} + vb_{c'} v_{n(c)}) ],
//
//   G0 = Omega (1-t^2) / d,   G1 = t (1-Omega^2) / d,
//   d  = (Omega+t)(1+Omega t),
//
// the Bargmann kernel of the oscillator-deformed propagator (rational in t
// and Omega; checked against the Mehler kernel and the truncated matrix
// inversion in the test suite).  External corners and the root cut carry
// index sources only: they terminate face chains, which is what makes the
// polynomial below sensitive to broken faces.
//
// The block polynomial is
//
//   HU_raw(t, Omega) = det(A) * prod_l d_l
//
// computed exactly; it is then rewritten in s = 1/Omega and rescaled so the
// lexicographically least admissible monomial carries coefficient
// 2^{2g} s^{2g-k}.

#include "phistar/matrix.hpp"
#include "phistar/poly.hpp"
#include "phistar/ribbon.hpp"
#include "phistar/spanning.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace phistar {

// Monomial key of HU: t-exponents plus the s-power.
struct HUMono {
    std::vector<int32_t> t_exp;
    int32_t s_pow = 0;
    friend bool operator<(const HUMono& a, const HUMono& b) {
        if (a.t_exp != b.t_exp) return a.t_exp < b.t_exp;
        return a.s_pow < b.s_pow;
    }
    friend bool operator==(const HUMono& a, const HUMono& b) {
        return a.t_exp == b.t_exp && a.s_pow == b.s_pow;
    }
};

struct HUPolynomial {
    size_t L = 0;
    std::map<HUMono, Rat> terms;
    Rat anchor_scale{1};  // applied rescaling, recorded for reproducibility
    int anchor_s_shift = 0;

    bool is_zero() const { return terms.empty(); }

    Rat coeff(const HUMono& m) const {
        auto it = terms.find(m);
        return it == terms.end() ? Rat(0) : it->second;
    }

    // Minimum over monomials of the t-degree summed over `lines`.
    int32_t min_degree_over_lines(const std::vector<int>& lines) const {
        if (terms.empty()) return 0;
        int32_t best = INT32_MAX;
        for (const auto& [m, c] : terms) {
            int32_t s = 0;
            for (int l : lines) s += m.t_exp.at(static_cast<size_t>(l));
            best = std::min(best, s);
        }
        return best;
    }

    Rat eval(const std::vector<Rat>& t, const Rat& s) const {
        Rat acc(0);
        for (const auto& [m, c] : terms) {
            Rat term = c * pow_rat(s, m.s_pow);
            for (size_t l = 0; l < L; ++l)
                if (m.t_exp[l] != 0) term *= pow_rat(t.at(l), m.t_exp[l]);
            acc += term;
        }
        return acc;
    }

    double eval_double(const std::vector<double>& t, double s) const {
        double acc = 0;
        for (const auto& [m, c] : terms) {
            double term = to_double(c) * std::pow(s, m.s_pow);
            for (size_t l = 0; l < L; ++l)
                if (m.t_exp[l] != 0) term *= std::pow(t.at(l), m.t_exp[l]);
            acc += term;
        }
        return acc;
    }
};

struct AdmissiblePair {
    std::vector<int> J;     // line subset (I is always the full line set)
    int k = 0;              // |I| + |J| - L - F + 1
    int s_power = 0;        // 2g - k
    BigInt coefficient{0};  // predicted 2^(2g)
};

namespace corner_detail {

struct SlotMap {
    int nslots = 0;
    std::vector<int> next;
    std::vector<int> corner_of;
};

inline SlotMap make_slots(const RibbonGraph& g) {
    SlotMap sm;
    const int N = static_cast<int>(g.num_vertices());
    sm.nslots = 4 * N + 1;  // one extra slot for the root cut
    sm.next.assign(sm.nslots, -1);
    sm.corner_of.assign(sm.nslots, -1);
    const int cut = 4 * N;
    for (int v = 0; v < N; ++v) {
        for (int i = 0; i < 4; ++i) {
            int slot = 4 * v + i;
            sm.corner_of[slot] = g.dart_at(v, i);
            sm.next[slot] = 4 * v + (i + 1) % 4;
        }
        if (v == g.root()) {
            sm.next[4 * v + 3] = cut;
            sm.next[cut] = 4 * v + 0;
        }
    }
    return sm;
}

}  // namespace corner_detail

// Cleared corner-mode matrix: rows belonging to line l are multiplied by
// d_l so every entry is a polynomial in (t_1..t_L, w), w = Omega.
struct CornerBlock {
    size_t L = 0;
    size_t dim = 0;
    Matrix<Poly> A;  // cleared
    size_t nvars() const { return L + 1; }
};

inline CornerBlock corner_block(const RibbonGraph& g) {
    using corner_detail::SlotMap;
    const SlotMap sm = corner_detail::make_slots(g);
    const size_t L = g.num_lines();
    const size_t nv = L + 1;
    const size_t M = static_cast<size_t>(sm.nslots);

    const Poly zero(nv);
    const Poly one = Poly::constant(nv, Rat(1));
    const Poly w = Poly::variable(nv, L);

    std::vector<Poly> dl(L, one), g0(L, zero), g1(L, zero);
    for (size_t l = 0; l < L; ++l) {
        const Poly t = Poly::variable(nv, l);
        dl[l] = (w + t) * (one + w * t);
        g0[l] = w * (one - t * t);
        g1[l] = t * (one - w * w);
    }

    // row -> line whose kernel touches it (-1: none); each corner belongs to
    // at most one line, so this is well defined.
    std::vector<int> row_line(M, -1);
    CornerBlock blk;
    blk.L = L;
    blk.dim = M;
    blk.A = Matrix<Poly>(M, M, zero);

    for (size_t l = 0; l < L; ++l) {
        auto [da, db] = g.lines()[l];
        int ca = 4 * g.vertex_of(da) + g.corner_of(da);
        int cb = 4 * g.vertex_of(db) + g.corner_of(db);
        row_line[static_cast<size_t>(ca)] = static_cast<int>(l);
        row_line[static_cast<size_t>(cb)] = static_cast<int>(l);
        int na = sm.next[ca], nb = sm.next[cb];
        blk.A(ca, na) -= g1[l];
        blk.A(cb, nb) -= g1[l];
        blk.A(ca, nb) -= g0[l];
        blk.A(cb, na) -= g0[l];
    }
    // Measure diagonal, with per-row clearing.
    for (size_t r = 0; r < M; ++r) {
        const Poly& mult = row_line[r] < 0 ? one : dl[static_cast<size_t>(row_line[r])];
        blk.A(r, r) += mult;
        if (row_line[r] < 0) continue;
        // entries of this row were written as -g0/-g1 numerators already
        // (they share the row denominator), nothing else to scale
    }
    return blk;
}

// det(A_cleared) = det(A) * prod_l d_l^2, so HU_raw = det(A_cleared)/prod d_l.
inline Poly hu_raw_omega(const RibbonGraph& g) {
    CornerBlock blk = corner_block(g);
    Poly d = det(blk.A, blk.nvars());
    const size_t L = blk.L;
    const size_t nv = blk.nvars();
    const Poly one = Poly::constant(nv, Rat(1));
    const Poly w = Poly::variable(nv, L);
    Poly prod = one;
    for (size_t l = 0; l < L; ++l) {
        const Poly t = Poly::variable(nv, l);
        prod *= (w + t) * (one + w * t);
    }
    return d.divide_exact(prod);
}

// Enumerate admissible pairs: I = all lines, J containing a dual spanning
// tree with complement containing a direct spanning tree.
inline std::vector<AdmissiblePair> admissible_pairs(const RibbonGraph& g) {
    const int L = static_cast<int>(g.num_lines());
    TopologyReport tr = topology(g);
    SpanningStructures st = spanning_structures(g);

    auto contains = [](const std::vector<int>& super, const std::vector<int>& sub) {
        return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
    };

    std::vector<AdmissiblePair> out;
    for (unsigned mask = 0; mask < (1u << L); ++mask) {
        std::vector<int> J, Jc;
        for (int l = 0; l < L; ++l)
            ((mask >> l) & 1u ? J : Jc).push_back(l);
        bool has_dual = false;
        for (const auto& dt : st.dual_trees)
            if (contains(J, dt)) {
                has_dual = true;
                break;
            }
        if (!has_dual) continue;
        bool has_direct = false;
        for (const auto& t : st.direct_trees)
            if (contains(Jc, t)) {
                has_direct = true;
                break;
            }
        if (!has_direct) continue;
        AdmissiblePair p;
        p.J = J;
        p.k = L + static_cast<int>(J.size()) - L - tr.F + 1;
        p.s_power = 2 * tr.g - p.k;
        p.coefficient = BigInt(1) << (2 * tr.g);
        out.push_back(std::move(p));
    }
    return out;
}

// Rewrite HU_raw(t, w)|_{w = 1/s}, clear s-powers, and rescale so the
// lexicographically least admissible monomial carries 2^{2g} s^{2g-k}.
inline HUPolynomial hu_extract(const RibbonGraph& g) {
    const size_t L = g.num_lines();
    Poly raw = hu_raw_omega(g);
    if (raw.is_zero()) throw std::logic_error("corner-mode determinant vanished identically");

    // w-exponent range
    int32_t wmax = raw.degree_in(L);
    std::map<HUMono, Rat> terms;
    for (const auto& [m, c] : raw.terms()) {
        HUMono hm;
        hm.t_exp.assign(m.e.begin(), m.e.begin() + static_cast<long>(L));
        hm.s_pow = wmax - m.e[L];  // w^a -> s^{wmax-a} after multiplying by s^{wmax}
        auto it = terms.find(hm);
        if (it == terms.end())
            terms.emplace(hm, c);
        else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    HUPolynomial hu;
    hu.L = L;
    hu.terms = std::move(terms);

    auto pairs = admissible_pairs(g);
    if (pairs.empty()) throw std::logic_error("no admissible pair found (connected graph expected)");

    // Lexicographically least admissible monomial and its slot.
    std::optional<HUMono> anchor;
    const AdmissiblePair* anchor_pair = nullptr;
    for (const auto& p : pairs) {
        HUMono m;
        m.t_exp.assign(L, 0);
        for (int l : p.J) m.t_exp[static_cast<size_t>(l)] = 1;
        m.s_pow = p.s_power;
        if (!anchor || m < *anchor) {
            anchor = m;
            anchor_pair = &p;
        }
    }

    // Shift s so the anchor's t-monomial has its predicted s-power among the
    // stored terms, then rescale the coefficient.
    std::optional<int32_t> found_pow;
    for (const auto& [m, c] : hu.terms) {
        if (std::equal(m.t_exp.begin(), m.t_exp.end(), anchor->t_exp.begin())) {
            if (!found_pow || m.s_pow < *found_pow) found_pow = m.s_pow;
        }
    }
    if (!found_pow)
        throw std::domain_error("normalization impossible: anchor admissible monomial missing");
    int shift = anchor->s_pow - *found_pow;
    hu.anchor_s_shift = shift;
    if (shift != 0) {
        std::map<HUMono, Rat> shifted;
        for (auto& [m, c] : hu.terms) {
            HUMono n = m;
            n.s_pow += shift;
            if (n.s_pow < 0) throw std::domain_error("normalization produced negative s-power");
            shifted.emplace(std::move(n), c);
        }
        hu.terms = std::move(shifted);
    }
    Rat found = hu.coeff(*anchor);
    if (found == 0)
        throw std::domain_error("normalization impossible: anchor coefficient vanished");
    Rat scale = Rat(anchor_pair->coefficient) / found;
    for (auto& [m, c] : hu.terms) c *= scale;
    hu.anchor_scale = scale;
    return hu;
}

struct LeadingTermMismatch {
    AdmissiblePair pair;
    Rat found;
};

struct LeadingTermReport {
    bool ok = true;
    std::vector<LeadingTermMismatch> mismatches;
};

inline LeadingTermReport leading_term_check(const RibbonGraph& g, const HUPolynomial& hu,
                                            const std::vector<AdmissiblePair>& pairs) {
    LeadingTermReport rep;
    for (const auto& p : pairs) {
        HUMono m;
        m.t_exp.assign(hu.L, 0);
        for (int l : p.J) m.t_exp[static_cast<size_t>(l)] = 1;
        m.s_pow = p.s_power;
        Rat c = hu.coeff(m);
        if (c != Rat(p.coefficient)) {
            rep.ok = false;
            rep.mismatches.push_back({p, c});
        }
    }
    return rep;
}

}  // namespace phistar
