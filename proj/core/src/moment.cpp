#include <holoext/moment.hpp>

#include <stdexcept>

namespace holoext {

GaussRational moment(const BPoly2& f, const GaussRational& a, unsigned N) {
    return disc_pullback(f, a).coeff(-1 - static_cast<int>(N));
}

Rational monomial_moment(unsigned h, unsigned k, unsigned m, unsigned N) {
    if (k <= N) return 0;  // integrand has no negative tau power
    long n = static_cast<long>(h + k + m);
    long j = static_cast<long>(k - N - 1);
    Int value = binomial(n, j);
    if ((h + k + m + N + 1) % 2 != 0) value = -value;
    return Rational(value);
}

Rational monomial_moment_by_residue(unsigned h, unsigned k, unsigned m, unsigned N) {
    LaurentPoly t_minus_1, tbar_minus_1;
    t_minus_1.add_term(1, GaussRational(1));
    t_minus_1.add_term(0, GaussRational(-1));
    tbar_minus_1.add_term(-1, GaussRational(1));
    tbar_minus_1.add_term(0, GaussRational(-1));
    LaurentPoly integrand =
        (t_minus_1.pow(h + m) * tbar_minus_1.pow(k)).shifted(static_cast<int>(N));
    return residue(integrand).re;  // the value is always rational
}

ParamPoly moment_symbolic(const SymbolicPullback& pb, unsigned N) {
    return pb.numerator.coeff(-1 - static_cast<int>(N));
}

ParamPoly moment_symbolic(const BPoly2& f, unsigned N) {
    return moment_symbolic(disc_pullback_symbolic(f), N);
}

unsigned antiholomorphic_span(const BPoly2& f) {
    unsigned span = 0;
    for (const auto& [mo, c] : f.coeffs()) span = std::max(span, mo.k + mo.p);
    return span;
}

bool moments_vanish(const BPoly2& f) {
    if (!is_normal_form(f)) throw std::invalid_argument("input is not in normal form");
    unsigned span = antiholomorphic_span(f);
    if (span == 0) return true;
    SymbolicPullback pb = disc_pullback_symbolic(f);
    for (unsigned N = 0; N < span; ++N)
        if (!param_is_zero(moment_symbolic(pb, N))) return false;
    return true;
}

}  // namespace holoext
