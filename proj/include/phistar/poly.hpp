#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
// Variables are indexed 0..nvars-1; callers assign meaning (line parameters
// t_1..t_L, the oscillator ratio s, Hepp variables x_i, ...).  Monomials are
// kept in a lexicographically ordered map so every traversal, print and
// comparison is deterministic.

#include "phistar/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace phistar {

struct Mono {
    std::vector<int32_t> e;  // exponent per variable

    explicit Mono(size_t nvars = 0) : e(nvars, 0) {}

    int32_t deg() const { return std::accumulate(e.begin(), e.end(), int32_t{0}); }

    friend bool operator<(const Mono& a, const Mono& b) { return a.e < b.e; }
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }

    Mono operator*(const Mono& o) const {
        Mono r = *this;
        if (o.e.size() != e.size()) throw std::invalid_argument("monomial arity mismatch");
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
};

class Poly {
public:
    explicit Poly(size_t nvars = 0) : nvars_(nvars) {}

    static Poly constant(size_t nvars, Rat c) {
        Poly p(nvars);
        if (c != 0) p.terms_[Mono(nvars)] = std::move(c);
        return p;
    }
    static Poly variable(size_t nvars, size_t idx, int32_t power = 1) {
        Poly p(nvars);
        Mono m(nvars);
        m.e.at(idx) = power;
        p.terms_[m] = Rat(1);
        return p;
    }

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Mono, Rat>& terms() const { return terms_; }

    Rat coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Mono& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_arity(b);
        Poly r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rat& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    int32_t degree_in(size_t var) const {
        int32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.e.at(var));
        return d;
    }
    int32_t total_degree() const {
        int32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.deg());
        return d;
    }
    int32_t min_degree_in(size_t var) const {
        if (terms_.empty()) return 0;
        int32_t d = INT32_MAX;
        for (const auto& [m, c] : terms_) d = std::min(d, m.e.at(var));
        return d;
    }

    // Minimum over monomials of the exponent sum restricted to `vars`.
    int32_t min_degree_over(const std::vector<size_t>& vars) const {
        if (terms_.empty()) return 0;
        int32_t best = INT32_MAX;
        for (const auto& [m, c] : terms_) {
            int32_t s = 0;
            for (size_t v : vars) s += m.e.at(v);
            best = std::min(best, s);
        }
        return best;
    }

    Rat eval(const std::vector<Rat>& point) const {
        if (point.size() != nvars_) throw std::invalid_argument("eval arity mismatch");
        Rat acc(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (size_t i = 0; i < nvars_; ++i)
                if (m.e[i] != 0) t *= pow_rat(point[i], m.e[i]);
            acc += t;
        }
        return acc;
    }

    // Substitute variable -> polynomial (same arity as the result space).
    Poly substitute(const std::vector<Poly>& images) const {
        if (images.size() != nvars_) throw std::invalid_argument("substitute arity mismatch");
        size_t out_arity = images.empty() ? 0 : images[0].nvars();
        Poly r(out_arity);
        for (const auto& [m, c] : terms_) {
            Poly t = Poly::constant(out_arity, c);
            for (size_t i = 0; i < nvars_; ++i)
                for (int32_t k = 0; k < m.e[i]; ++k) t *= images[i];
            r += t;
        }
        return r;
    }

    // Exact division; throws if the remainder is nonzero.
    Poly divide_exact(const Poly& d) const;

    // Exact square root; throws if *this is not a perfect square.
    Poly sqrt_exact() const;

    Poly divide_by_rat(const Rat& c) const {
        if (c == 0) throw std::domain_error("division by zero");
        Poly r(nvars_);
        for (const auto& [m, v] : terms_) r.terms_[m] = v / c;
        return r;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            for (size_t i = 0; i < nvars_; ++i) {
                if (m.e[i] == 0) continue;
                os << "*" << names.at(i);
                if (m.e[i] != 1) os << "^" << m.e[i];
            }
        }
        return os.str();
    }

private:
    void check_arity(const Poly& o) const {
        if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
    }

    size_t nvars_ = 0;
    std::map<Mono, Rat> terms_;
};

inline Poly Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = *this;
    Poly quot(nvars_);
    // Lex-leading term of the divisor (largest monomial in map order).
    const auto lead = std::prev(d.terms_.end());
    while (!rem.terms_.empty()) {
        const auto rl = std::prev(rem.terms_.end());
        Mono qm(nvars_);
        for (size_t i = 0; i < nvars_; ++i) {
            qm.e[i] = rl->first.e[i] - lead->first.e[i];
            if (qm.e[i] < 0) throw std::domain_error("inexact polynomial division");
        }
        Rat qc = rl->second / lead->second;
        Poly qterm(nvars_);
        qterm.terms_[qm] = qc;
        quot += qterm;
        rem -= qterm * d;
    }
    return quot;
}

inline Poly Poly::sqrt_exact() const {
    if (is_zero()) return Poly(nvars_);
    // Peel off the leading term: if p = (a*m + lower)^2 the lex-leading term
    // of p is a^2*m^2.  Recover a*m, then iterate r_{k+1} = r_k + corr where
    // corr kills the current leading discrepancy.
    const auto lt = std::prev(terms_.end());
    Mono half(nvars_);
    for (size_t i = 0; i < nvars_; ++i) {
        if (lt->first.e[i] % 2 != 0) throw std::domain_error("not a perfect square (odd leading exponent)");
        half.e[i] = lt->first.e[i] / 2;
    }
    BigInt n = num(lt->second), d = den(lt->second);
    BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) throw std::domain_error("not a perfect square (leading coefficient)");
    Rat lc(sn, sd);

    Poly root(nvars_);
    root.terms_[half] = lc;
    Poly lead2(nvars_);
    lead2.terms_[half] = lc * 2;

    Poly resid = *this - root * root;
    while (!resid.is_zero()) {
        const auto rl = std::prev(resid.terms().end());
        Mono qm(nvars_);
        for (size_t i = 0; i < nvars_; ++i) {
            qm.e[i] = rl->first.e[i] - half.e[i];
            if (qm.e[i] < 0) throw std::domain_error("not a perfect square");
        }
        Poly corr(nvars_);
        corr.terms_[qm] = rl->second / (lc * 2);
        root += corr;
        resid = *this - root * root;
    }
    return root;
}

}  // namespace phistar
