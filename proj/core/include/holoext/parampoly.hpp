#pragma once

#include <holoext/gauss.hpp>

#include <map>
#include <utility>

namespace holoext {

/// Polynomial in the formal disc-parameter pair: sum of c * alpha^p * abar^q.
/// alpha and abar are independent commuting formal variables; conjugate
/// consistency is a property of evaluation (abar <- conj(a)), not of storage.
/// Zero coefficients are never stored, so the zero polynomial is the empty map.
class ParamPoly {
public:
    using Key = std::pair<unsigned, unsigned>;

    ParamPoly() = default;
    ParamPoly(int c) { add_term(0, 0, GaussRational(c)); }

    static ParamPoly constant(GaussRational c) { return monomial(0, 0, std::move(c)); }

    static ParamPoly monomial(unsigned p, unsigned q, GaussRational c) {
        ParamPoly r;
        r.add_term(p, q, c);
        return r;
    }

    const std::map<Key, GaussRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GaussRational coeff(unsigned p, unsigned q) const {
        auto it = terms_.find({p, q});
        return it == terms_.end() ? GaussRational{} : it->second;
    }

    void add_term(unsigned p, unsigned q, const GaussRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(Key{p, q}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ParamPoly& operator+=(const ParamPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }

    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    ParamPoly operator-() const {
        ParamPoly r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

    ParamPoly scaled(const GaussRational& s) const {
        ParamPoly r;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
        return r;
    }

    ParamPoly pow(unsigned n) const {
        ParamPoly r(1);
        for (unsigned j = 0; j < n; ++j) r *= *this;
        return r;
    }

    /// Substitutes alpha <- a, abar <- conj(a). Exact.
    GaussRational eval(const GaussRational& a) const;

    friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

private:
    std::map<Key, GaussRational> terms_;
};

/// Formal identity test: true iff no coefficients are stored. Identical
/// vanishing of a polynomial in (a, conj a) is equivalent to coefficient-wise
/// vanishing (polarization); the sampling oracle in the tests cross-checks.
inline bool param_is_zero(const ParamPoly& q) { return q.is_zero(); }

}  // namespace holoext
