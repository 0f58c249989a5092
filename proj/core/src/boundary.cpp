#include <holoext/boundary.hpp>

#include <stdexcept>

namespace holoext {

GaussRational BPoly2::eval(const GaussRational& z1, const GaussRational& z2) const {
    GaussRational z1c = z1.conj(), z2c = z2.conj();
    GaussRational acc;
    for (const auto& [mo, c] : coeffs_)
        acc += c * z1.pow(mo.h) * z1c.pow(mo.k) * z2.pow(mo.m) * z2c.pow(mo.p);
    return acc;
}

unsigned weighted_degree(const BPoly2& f) {
    if (f.is_zero()) throw std::domain_error("weighted degree of the zero polynomial is undefined");
    unsigned d = 0;
    for (const auto& [mo, c] : f.coeffs()) d = std::max(d, mo.weighted_degree());
    return d;
}

bool is_normal_form(const BPoly2& f) {
    for (const auto& [mo, c] : f.coeffs())
        if (!mo.is_normal()) return false;
    return true;
}

namespace {

// One monomial reduced modulo z2*~z2 = 1 - z1*~z1, recursively.
void add_reduced(BPoly2& out, const Mono2& mo, const GaussRational& c) {
    if (c.is_zero()) return;
    if (mo.is_normal()) {
        out.add_term(mo, c);
        return;
    }
    Mono2 dropped{mo.h, mo.k, mo.m - 1, mo.p - 1};
    add_reduced(out, dropped, c);
    add_reduced(out, {mo.h + 1, mo.k + 1, mo.m - 1, mo.p - 1}, -c);
}

}  // namespace

BPoly2 normal_form(const BPoly2& f) {
    BPoly2 out;
    for (const auto& [mo, c] : f.coeffs()) add_reduced(out, mo, c);
    return out;
}

bool is_holomorphic(const BPoly2& f) {
    if (!is_normal_form(f)) throw std::invalid_argument("input is not in normal form");
    for (const auto& [mo, c] : f.coeffs())
        if (!mo.is_holomorphic()) return false;
    return true;
}

BPoly2 holomorphic_part(const BPoly2& f) {
    if (!is_normal_form(f)) throw std::invalid_argument("input is not in normal form");
    BPoly2 out;
    for (const auto& [mo, c] : f.coeffs())
        if (mo.is_holomorphic()) out.add_term(mo, c);
    return out;
}

}  // namespace holoext
