#include <holoext/disc.hpp>

#include <stdexcept>

namespace holoext {

std::pair<GaussRational, GaussRational> disc_eval(const GaussRational& a,
                                                  const GaussRational& tau) {
    if (tau.norm_sq() != 1) throw std::invalid_argument("tau is not on the unit circle");
    GaussRational c(Rational(1) / (1 + a.norm_sq()));  // 1 + |a|^2 is never zero
    GaussRational w = (tau - GaussRational(1)) * c;
    return {w * a, w + GaussRational(1)};
}

LaurentPoly disc_pullback(const BPoly2& f, const GaussRational& a) {
    GaussRational c(Rational(1) / (1 + a.norm_sq()));
    GaussRational ca = c * a;
    GaussRational cab = c * a.conj();
    GaussRational one(1);

    // Coordinates along the disc, with conj(tau) already rewritten as tau^-1.
    LaurentPoly z1, z1c, z2, z2c;
    z1.add_term(1, ca);
    z1.add_term(0, -ca);
    z1c.add_term(-1, cab);
    z1c.add_term(0, -cab);
    z2.add_term(1, c);
    z2.add_term(0, one - c);
    z2c.add_term(-1, c);
    z2c.add_term(0, one - c);

    LaurentPoly out;
    for (const auto& [mo, b] : f.coeffs()) {
        LaurentPoly term = z1.pow(mo.h) * z1c.pow(mo.k) * z2.pow(mo.m) * z2c.pow(mo.p);
        out += term.scaled(b);
    }
    return out;
}

SymbolicPullback disc_pullback_symbolic(const BPoly2& f) {
    SymbolicPullback out;
    if (f.is_zero()) return out;

    unsigned L = weighted_degree(f);
    out.cleared_power = L;

    using PLaurent = SparseLaurent<ParamPoly>;
    ParamPoly one(1);
    ParamPoly minus_one = -one;
    ParamPoly alpha = ParamPoly::monomial(1, 0, GaussRational(1));
    ParamPoly abar = ParamPoly::monomial(0, 1, GaussRational(1));
    ParamPoly aabar = ParamPoly::monomial(1, 1, GaussRational(1));
    ParamPoly s = one + aabar;  // the cleared scalar 1 + |a|^2

    // Numerators of the coordinates after clearing one power of s each:
    //   z1  -> alpha (tau - 1), ~z1 -> abar (tau^-1 - 1),
    //   z2  -> tau - 1 + s,     ~z2 -> tau^-1 - 1 + s.
    PLaurent t_minus_1, tinv_minus_1, z2_num, z2c_num;
    t_minus_1.add_term(1, one);
    t_minus_1.add_term(0, minus_one);
    tinv_minus_1.add_term(-1, one);
    tinv_minus_1.add_term(0, minus_one);
    z2_num.add_term(1, one);
    z2_num.add_term(0, aabar);  // s - 1
    z2c_num.add_term(-1, one);
    z2c_num.add_term(0, aabar);

    for (const auto& [mo, b] : f.coeffs()) {
        unsigned used = mo.h + mo.k + mo.m + mo.p;  // powers of s consumed
        PLaurent term = t_minus_1.pow(mo.h) * tinv_minus_1.pow(mo.k) * z2_num.pow(mo.m) *
                        z2c_num.pow(mo.p);
        ParamPoly scale = alpha.pow(mo.h) * abar.pow(mo.k) * s.pow(L - used);
        out.numerator += term.scaled(scale.scaled(b));
    }
    return out;
}

}  // namespace holoext
