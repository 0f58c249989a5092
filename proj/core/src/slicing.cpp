#include <holoext/slicing.hpp>

#include <holoext/errors.hpp>

#include <stdexcept>

namespace holoext {

unsigned MonoN::weighted_degree() const {
    unsigned d = 0;
    const unsigned n = dim();
    for (unsigned i = 0; i < n; ++i) {
        unsigned w = (i + 1 == n) ? 2 : 1;
        d += w * (mu[i] + nu[i]);
    }
    return d;
}

bool MonoN::is_holomorphic() const {
    for (unsigned e : nu)
        if (e > 0) return false;
    return true;
}

BPolyN BPolyN::monomial(MonoN mo, GaussRational c) {
    BPolyN f(mo.dim());
    f.add_term(mo, c);
    return f;
}

void BPolyN::add_term(const MonoN& mo, const GaussRational& c) {
    if (mo.dim() != dim_ || mo.nu.size() != dim_)
        throw std::invalid_argument("monomial dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(mo, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

GaussRational BPolyN::eval(const std::vector<GaussRational>& z) const {
    if (z.size() != dim_) throw std::invalid_argument("point dimension mismatch");
    GaussRational acc;
    for (const auto& [mo, c] : coeffs_) {
        GaussRational term = c;
        for (unsigned i = 0; i < dim_; ++i)
            term *= z[i].pow(mo.mu[i]) * z[i].conj().pow(mo.nu[i]);
        acc += term;
    }
    return acc;
}

unsigned weighted_degree(const BPolyN& f) {
    if (f.is_zero()) throw std::domain_error("weighted degree of the zero polynomial is undefined");
    unsigned d = 0;
    for (const auto& [mo, c] : f.coeffs()) d = std::max(d, mo.weighted_degree());
    return d;
}

bool is_normal_form(const BPolyN& f) {
    for (const auto& [mo, c] : f.coeffs())
        if (!mo.is_normal()) return false;
    return true;
}

namespace {

// One monomial reduced modulo z_n * ~z_n = 1 - sum_{i<n} z_i * ~z_i.
void add_reduced(BPolyN& out, const MonoN& mo, const GaussRational& c) {
    if (c.is_zero()) return;
    if (mo.is_normal()) {
        out.add_term(mo, c);
        return;
    }
    const unsigned n = mo.dim();
    MonoN dropped = mo;
    --dropped.mu[n - 1];
    --dropped.nu[n - 1];
    add_reduced(out, dropped, c);
    for (unsigned i = 0; i + 1 < n; ++i) {
        MonoN lifted = dropped;
        ++lifted.mu[i];
        ++lifted.nu[i];
        add_reduced(out, lifted, -c);
    }
}

}  // namespace

BPolyN normal_form(const BPolyN& f) {
    BPolyN out(f.dim());
    for (const auto& [mo, c] : f.coeffs()) add_reduced(out, mo, c);
    return out;
}

bool is_holomorphic(const BPolyN& f) {
    if (!is_normal_form(f)) throw std::invalid_argument("input is not in normal form");
    for (const auto& [mo, c] : f.coeffs())
        if (!mo.is_holomorphic()) return false;
    return true;
}

BPolyN holomorphic_part(const BPolyN& f) {
    if (!is_normal_form(f)) throw std::invalid_argument("input is not in normal form");
    BPolyN out(f.dim());
    for (const auto& [mo, c] : f.coeffs())
        if (mo.is_holomorphic()) out.add_term(mo, c);
    return out;
}

BPolyN to_bpolyn(const BPoly2& f) {
    BPolyN out(2);
    for (const auto& [mo, c] : f.coeffs()) out.add_term({{mo.h, mo.m}, {mo.k, mo.p}}, c);
    return out;
}

BPoly2 to_bpoly2(const BPolyN& f) {
    if (f.dim() != 2) throw std::invalid_argument("dimension is not 2");
    BPoly2 out;
    for (const auto& [mo, c] : f.coeffs())
        out.add_term({mo.mu[0], mo.nu[0], mo.mu[1], mo.nu[1]}, c);
    return out;
}

BPoly2 slice_restrict(const BPolyN& F, const SlicePlane& P) {
    const unsigned n = F.dim();
    if (P.dim() != n) throw std::invalid_argument("plane dimension mismatch");
    if (!P.v.back().is_zero()) throw std::invalid_argument("plane vector must have v_n = 0");
    Rational norm;
    for (const auto& vi : P.v) norm += vi.norm_sq();
    if (norm != 1) throw std::invalid_argument("plane vector is not an exact unit vector");

    // z_i = zeta1 * v_i for i < n and z_n = zeta2, so each monomial maps to a
    // single slice monomial scaled by the matching powers of v and conj(v).
    BPoly2 out;
    for (const auto& [mo, c] : F.coeffs()) {
        unsigned h = 0, k = 0;
        GaussRational scale = c;
        for (unsigned i = 0; i + 1 < n; ++i) {
            h += mo.mu[i];
            k += mo.nu[i];
            scale *= P.v[i].pow(mo.mu[i]) * P.v[i].conj().pow(mo.nu[i]);
        }
        out.add_term({h, k, mo.mu[n - 1], mo.nu[n - 1]}, scale);
    }
    return out;
}

namespace {

// Restriction of a holomorphic slice extension to the common line zeta1 = 0.
std::map<unsigned, GaussRational> line_restriction_of(const BPoly2& extension) {
    std::map<unsigned, GaussRational> line;
    for (const auto& [mo, c] : extension.coeffs())
        if (mo.h == 0) line.emplace(mo.m, c);
    return line;
}

}  // namespace

SliceFamilyReport slice_certify_all(const BPolyN& F, const std::vector<SlicePlane>& planes) {
    if (planes.empty()) throw std::invalid_argument("empty plane family");
    SliceFamilyReport rep;
    rep.all_extend = true;
    for (const auto& plane : planes) {
        SliceOutcome outcome;
        outcome.certificate = certify(slice_restrict(F, plane));
        if (outcome.certificate.extends())
            outcome.line_restriction = line_restriction_of(outcome.certificate.extension);
        else
            rep.all_extend = false;
        rep.slices.push_back(std::move(outcome));
    }
    rep.glue_ok = rep.all_extend;
    if (rep.all_extend)
        for (const auto& s : rep.slices)
            if (s.line_restriction != rep.slices.front().line_restriction) rep.glue_ok = false;
    return rep;
}

std::vector<SlicePlane> default_planes(unsigned n, unsigned count) {
    if (n < 3) throw std::invalid_argument("slice planes need dimension >= 3");

    // Gaussian-integer pairs (g1, g2) with |g1|^2 + |g2|^2 a perfect square
    // and both entries nonzero, in a fixed enumeration order.
    std::vector<std::pair<GaussRational, GaussRational>> pairs;
    for (long norm = 2; pairs.size() < count && norm <= 64; ++norm) {
        for (long x1 = 0; x1 <= norm && pairs.size() < count; ++x1)
            for (long y1 = 0; y1 <= norm && pairs.size() < count; ++y1)
                for (long x2 = 0; x2 <= norm && pairs.size() < count; ++x2)
                    for (long y2 = 0; y2 <= norm && pairs.size() < count; ++y2) {
                        if ((x1 == 0 && y1 == 0) || (x2 == 0 && y2 == 0)) continue;
                        long total = x1 * x1 + y1 * y1 + x2 * x2 + y2 * y2;
                        if (total != norm * norm) continue;
                        GaussRational g1(Rational(x1, norm), Rational(y1, norm));
                        GaussRational g2(Rational(x2, norm), Rational(y2, norm));
                        bool seen = false;
                        for (const auto& [a, b] : pairs)
                            if (a == g1 && b == g2) seen = true;
                        if (!seen) pairs.emplace_back(g1, g2);
                    }
    }
    if (pairs.size() < count) throw internal_error("plane enumeration exhausted");

    std::vector<SlicePlane> planes;
    planes.reserve(count);
    for (unsigned j = 0; j < count; ++j) {
        SlicePlane plane;
        plane.v.assign(n, GaussRational{});
        // For n = 3 both slots are always filled; beyond that the pair
        // rotates through the coordinate positions.
        unsigned slot = (n == 3) ? 0 : j % (n - 2);
        plane.v[slot] = pairs[j].first;
        plane.v[slot + 1] = pairs[j].second;
        planes.push_back(std::move(plane));
    }
    return planes;
}

NCertificate certify_nd(const BPolyN& F) {
    NCertificate out;
    BPolyN g = normal_form(F);

    out.extends = true;
    for (const auto& [mo, c] : g.coeffs())
        if (!mo.is_holomorphic()) {
            out.extends = false;
            out.offending = mo;
            break;
        }
    if (out.extends) out.extension = g;

    SliceFamilyReport family = slice_certify_all(F, default_planes(F.dim()));
    if (!family.all_extend)
        for (const auto& s : family.slices)
            if (!s.certificate.extends()) {
                out.slice_witness = s.certificate;
                break;
            }
    out.cross_check_agrees =
        out.extends ? (family.all_extend && family.glue_ok) : !family.all_extend;
    return out;
}

}  // namespace holoext
