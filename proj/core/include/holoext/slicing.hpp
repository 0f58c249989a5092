#pragma once

#include <holoext/certify.hpp>

#include <map>
#include <optional>
#include <vector>

namespace holoext {

/// Monomial exponents z^mu * conj(z)^nu in n variables; both index vectors
/// have length n. The grading gives weight 2 to the last variable (the
/// direction of the base point z_o = (0, ..., 0, 1)) and its conjugate.
struct MonoN {
    std::vector<unsigned> mu;
    std::vector<unsigned> nu;

    unsigned dim() const { return static_cast<unsigned>(mu.size()); }
    unsigned weighted_degree() const;
    bool is_normal() const { return mu.back() == 0 || nu.back() == 0; }
    bool is_holomorphic() const;

    friend auto operator<=>(const MonoN&, const MonoN&) = default;
};

/// Boundary polynomial on the sphere |z|^2 = 1 in C^n.
class BPolyN {
public:
    explicit BPolyN(unsigned dim = 2) : dim_(dim) {}

    static BPolyN monomial(MonoN mo, GaussRational c);

    unsigned dim() const { return dim_; }
    const std::map<MonoN, GaussRational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(const MonoN& mo, const GaussRational& c);

    GaussRational eval(const std::vector<GaussRational>& z) const;

    friend bool operator==(const BPolyN&, const BPolyN&) = default;

private:
    unsigned dim_;
    std::map<MonoN, GaussRational> coeffs_;
};

unsigned weighted_degree(const BPolyN& f);  // throws std::domain_error on zero
bool is_normal_form(const BPolyN& f);

/// Rewrites z_n * ~z_n -> 1 - sum_{i<n} z_i * ~z_i until every monomial has
/// min(mu_n, nu_n) = 0.
BPolyN normal_form(const BPolyN& f);

bool is_holomorphic(const BPolyN& f);  // requires normal form
BPolyN holomorphic_part(const BPolyN& f);

/// Conversions between the 2-variable container and the n = 2 general one.
BPolyN to_bpolyn(const BPoly2& f);
BPoly2 to_bpoly2(const BPolyN& f);  // requires dim() == 2

/// The 2-plane span{v, z_o} through 0 and z_o, in slice coordinates
/// z = zeta1 * v + zeta2 * z_o. Requires |v|^2 = 1 exactly and v_n = 0, which
/// makes the slice of the unit sphere exactly |zeta1|^2 + |zeta2|^2 = 1.
struct SlicePlane {
    std::vector<GaussRational> v;

    unsigned dim() const { return static_cast<unsigned>(v.size()); }
    friend bool operator==(const SlicePlane&, const SlicePlane&) = default;
};

/// Restriction of F to a slice plane as a boundary polynomial in
/// (zeta1, ~zeta1, zeta2, ~zeta2). Rejects planes with |v|^2 != 1 or v_n != 0.
BPoly2 slice_restrict(const BPolyN& F, const SlicePlane& P);

struct SliceOutcome {
    Certificate certificate;
    // Restriction of the slice extension to the common line L (zeta1 = 0),
    // as exponent -> coefficient; only set when the slice extends.
    std::map<unsigned, GaussRational> line_restriction;
};

struct SliceFamilyReport {
    std::vector<SliceOutcome> slices;  // in plane order
    bool all_extend = false;
    // All line restrictions coincide exactly; meaningful when all_extend.
    bool glue_ok = false;
};

/// Certifies each slice with the 2-dimensional engine and checks that the
/// per-slice extensions agree on the common line through 0 and z_o.
/// Report order follows the plane order deterministically.
SliceFamilyReport slice_certify_all(const BPolyN& F, const std::vector<SlicePlane>& planes);

/// Deterministic family of exact-unit slice planes with Gaussian-rational
/// entries (normalized Gaussian-integer vectors whose norm is a perfect
/// square). For n = 3 every coordinate is nonzero; for higher n the family
/// rotates a nonzero pair through the coordinate positions.
std::vector<SlicePlane> default_planes(unsigned n, unsigned count = 12);

struct NCertificate {
    bool extends = false;
    BPolyN extension;                      // holomorphic normal form, when extends
    std::optional<MonoN> offending;        // first antiholomorphic exponent otherwise
    std::optional<Certificate> slice_witness;  // from the sample plane family
    bool cross_check_agrees = false;       // verdict matches the plane family
};

/// n-dimensional decision: Extends iff the normal form of F has no
/// antiholomorphic exponent; cross-validated against slice_certify_all on the
/// deterministic default plane family.
NCertificate certify_nd(const BPolyN& F);

}  // namespace holoext
