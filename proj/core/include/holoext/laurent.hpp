#pragma once

#include <holoext/gauss.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace holoext {

/// Sparse Laurent polynomial in one variable over a coefficient ring C.
/// C must be a ring type with default construction (zero), +=, *, unary -,
/// and is_zero(). Zero coefficients are never stored.
template <typename C>
class SparseLaurent {
public:
    SparseLaurent() = default;

    static SparseLaurent monomial(int exp, C coeff) {
        SparseLaurent p;
        p.add_term(exp, coeff);
        return p;
    }

    const std::map<int, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient at the given exponent; zero if absent.
    C coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? C{} : it->second;
    }

    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    void add_term(int exp, const C& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SparseLaurent& operator+=(const SparseLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    friend SparseLaurent operator+(SparseLaurent a, const SparseLaurent& b) { return a += b; }

    friend SparseLaurent operator*(const SparseLaurent& a, const SparseLaurent& b) {
        SparseLaurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    SparseLaurent& operator*=(const SparseLaurent& o) { return *this = *this * o; }

    SparseLaurent operator-() const {
        SparseLaurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend SparseLaurent operator-(const SparseLaurent& a, const SparseLaurent& b) {
        return a + (-b);
    }

    SparseLaurent scaled(const C& s) const {
        SparseLaurent r;
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.add_term(e, c * s);
        return r;
    }

    /// Shift every exponent by d (multiplication by tau^d).
    SparseLaurent shifted(int d) const {
        SparseLaurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + d, c);
        return r;
    }

    SparseLaurent pow(unsigned n) const {
        SparseLaurent r = monomial(0, C{1});
        for (unsigned j = 0; j < n; ++j) r *= *this;
        return r;
    }

    friend bool operator==(const SparseLaurent&, const SparseLaurent&) = default;

private:
    std::map<int, C> terms_;
};

/// Laurent polynomial in the circle variable tau. After every occurrence of
/// conj(tau) is rewritten as tau^-1 (valid on |tau| = 1), a single integer
/// exponent per term suffices.
using LaurentPoly = SparseLaurent<GaussRational>;

/// One pre-reduction term c * tau^j * conj(tau)^k of a function on the circle.
struct CircTerm {
    int tau_exp;
    int taubar_exp;
    GaussRational coeff;
};

/// Rewrites conj(tau) = tau^-1: each (j, k, c) contributes c * tau^(j-k).
/// Like exponents are merged and zero coefficients dropped.
LaurentPoly circ_reduce(const std::vector<CircTerm>& terms);

/// Coefficient of tau^-1 (zero if absent). The contour integral of p over
/// the unit circle equals 2*pi*i times this value; the factor 2*pi*i is never
/// materialized in the exact engine.
GaussRational residue(const LaurentPoly& p);

/// Exact evaluation at a nonzero point (negative powers use exact division).
GaussRational eval_at(const LaurentPoly& p, const GaussRational& tau);

}  // namespace holoext
