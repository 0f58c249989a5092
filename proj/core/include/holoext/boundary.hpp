#pragma once

#include <holoext/gauss.hpp>

#include <map>

namespace holoext {

/// Exponents of one mixed monomial z1^h * ~z1^k * z2^m * ~z2^p on the sphere
/// (~ denotes conjugation). The grading gives weight 2 to the second variable
/// and its conjugate. Normal form requires min(m, p) = 0.
struct Mono2 {
    unsigned h = 0;  // power of z1
    unsigned k = 0;  // power of ~z1
    unsigned m = 0;  // power of z2
    unsigned p = 0;  // power of ~z2

    unsigned weighted_degree() const { return h + k + 2 * m + 2 * p; }
    bool is_normal() const { return m == 0 || p == 0; }
    bool is_holomorphic() const { return k == 0 && p == 0; }

    friend auto operator<=>(const Mono2&, const Mono2&) = default;
};

/// Boundary polynomial on the sphere |z1|^2 + |z2|^2 = 1: a finite map from
/// mixed monomial exponents to exact Gaussian-rational coefficients. The zero
/// polynomial is the empty map. Values are immutable after construction and
/// all operations are pure, so sharing across threads is safe.
class BPoly2 {
public:
    BPoly2() = default;

    static BPoly2 monomial(Mono2 mo, GaussRational c) {
        BPoly2 f;
        f.add_term(mo, c);
        return f;
    }
    static BPoly2 constant(GaussRational c) { return monomial({}, std::move(c)); }

    const std::map<Mono2, GaussRational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }

    GaussRational coeff(const Mono2& mo) const {
        auto it = coeffs_.find(mo);
        return it == coeffs_.end() ? GaussRational{} : it->second;
    }

    void add_term(const Mono2& mo, const GaussRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.emplace(mo, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    BPoly2& operator+=(const BPoly2& o) {
        for (const auto& [mo, c] : o.coeffs_) add_term(mo, c);
        return *this;
    }
    friend BPoly2 operator+(BPoly2 a, const BPoly2& b) { return a += b; }

    BPoly2 operator-() const {
        BPoly2 r;
        for (const auto& [mo, c] : coeffs_) r.coeffs_.emplace(mo, -c);
        return r;
    }
    friend BPoly2 operator-(const BPoly2& a, const BPoly2& b) { return a + (-b); }

    friend BPoly2 operator*(const BPoly2& a, const BPoly2& b) {
        BPoly2 r;
        for (const auto& [ma, ca] : a.coeffs_)
            for (const auto& [mb, cb] : b.coeffs_)
                r.add_term({ma.h + mb.h, ma.k + mb.k, ma.m + mb.m, ma.p + mb.p}, ca * cb);
        return r;
    }

    BPoly2 scaled(const GaussRational& s) const {
        BPoly2 r;
        if (s.is_zero()) return r;
        for (const auto& [mo, c] : coeffs_) r.add_term(mo, c * s);
        return r;
    }

    /// Exact evaluation at a point of C^2 (conjugate exponents use conj()).
    GaussRational eval(const GaussRational& z1, const GaussRational& z2) const;

    friend bool operator==(const BPoly2&, const BPoly2&) = default;

private:
    std::map<Mono2, GaussRational> coeffs_;
};

/// Maximum of h + k + 2m + 2p over stored monomials.
/// Throws std::domain_error on the zero polynomial (undefined degree).
unsigned weighted_degree(const BPoly2& f);

bool is_normal_form(const BPoly2& f);

/// Rewrites z2*~z2 -> 1 - z1*~z1 until no monomial contains both z2 and ~z2.
/// The output agrees with f at every point of the sphere and is a fixed point
/// of the rewrite. Order of rewriting does not matter: each step strictly
/// reduces min(m, p) and the rule is linear, so there are no critical pairs.
BPoly2 normal_form(const BPoly2& f);

/// True iff every monomial has k = 0 and p = 0. The zero polynomial counts as
/// holomorphic (trivial extension). Rejects input not in normal form.
bool is_holomorphic(const BPoly2& f);

/// Drops all monomials with k > 0 or p > 0. Rejects input not in normal form.
BPoly2 holomorphic_part(const BPoly2& f);

}  // namespace holoext
