#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <holoext/moment.hpp>

#include "helpers.hpp"

using namespace holoext;
namespace ht = holoext::testing;

namespace {

BPoly2 mono(unsigned h, unsigned k, unsigned m, unsigned p, int c = 1) {
    return BPoly2::monomial({h, k, m, p}, GaussRational(c));
}

}  // namespace

TEST_CASE("moments of simple data") {
    auto g = ht::rng(41);
    // holomorphic data has no negative tau powers, so every moment vanishes
    BPoly2 hol = mono(2, 0, 1, 0);  // z1^2 z2
    for (unsigned N = 0; N < 4; ++N)
        for (int j = 0; j < 5; ++j) CHECK(moment(hol, ht::random_gauss(g, 4), N).is_zero());

    CHECK(moment(mono(1, 1, 0, 0), GaussRational(1), 0) == GaussRational(Rational(-1, 4)));
    CHECK(moment(mono(0, 0, 0, 1), GaussRational(1), 0) == GaussRational(Rational(1, 2)));
}

TEST_CASE("closed-form single-monomial moment") {
    CHECK(monomial_moment(1, 1, 0, 0) == Rational(-1));
    CHECK(monomial_moment(0, 2, 0, 0) == Rational(-2));
    for (unsigned h = 0; h <= 3; ++h)
        for (unsigned m = 0; m <= 3; ++m)
            for (unsigned N = 0; N <= 4; ++N)
                for (unsigned k = 0; k <= N; ++k) CHECK(monomial_moment(h, k, m, N) == 0);
}

TEST_CASE("closed form equals both residue routes, exhaustively to 4") {
    for (unsigned h = 0; h <= 4; ++h)
        for (unsigned k = 0; k <= 4; ++k)
            for (unsigned m = 0; m <= 4; ++m)
                for (unsigned N = 0; N <= 4; ++N) {
                    Rational closed = monomial_moment(h, k, m, N);
                    CHECK(closed == ht::oracle_monomial_moment(h, k, m, N));
                    CHECK(closed == monomial_moment_by_residue(h, k, m, N));
                }
}

TEST_CASE("symbolic moments of known data") {
    // f = z1 ~z1: cleared moment at N = 0 is -alpha*abar (L = 2)
    ParamPoly ms = moment_symbolic(mono(1, 1, 0, 0), 0);
    CHECK(ms == ParamPoly::monomial(1, 1, GaussRational(-1)));

    // holomorphic f: zero for every N
    BPoly2 hol = mono(3, 0, 0, 0) + mono(0, 0, 2, 0, 5);
    for (unsigned N = 0; N < 5; ++N) CHECK(param_is_zero(moment_symbolic(hol, N)));

    // f = ~z1 at N = 0: the oracle fixes the sign to +abar (L = 1):
    // the pullback coefficient is abar/(1+|a|^2) and the core residue is +1.
    ParamPoly conj_moment = moment_symbolic(mono(0, 1, 0, 0), 0);
    CHECK(conj_moment == ParamPoly::monomial(0, 1, GaussRational(1)));
    CHECK(ht::oracle_monomial_moment(0, 1, 0, 0) == Rational(1));
    // cross-check at concrete a = 1: mu = 1/2, cleared by s = 2
    CHECK(moment(mono(0, 1, 0, 0), GaussRational(1), 0) == GaussRational(Rational(1, 2)));
}

TEST_CASE("symbolic moments are consistent with concrete ones") {
    auto g = ht::rng(43);
    for (int iter = 0; iter < 50; ++iter) {
        BPoly2 f = ht::random_normal_poly(g, 6);
        SymbolicPullback pb = disc_pullback_symbolic(f);
        GaussRational a = ht::random_gauss(g, 4);
        GaussRational denom = GaussRational(1 + a.norm_sq()).pow(pb.cleared_power);
        for (unsigned N = 0; N <= antiholomorphic_span(f); ++N)
            CHECK(moment_symbolic(pb, N).eval(a) == moment(f, a, N) * denom);
    }
}

TEST_CASE("moments_vanish decides the hypothesis in finite time") {
    CHECK(moments_vanish(mono(3, 0, 0, 0) + mono(0, 0, 1, 0, 2)));  // z1^3 + 2 z2
    CHECK(!moments_vanish(mono(1, 1, 0, 0)));                       // fails at N = 0

    // z2 ~z2 normalizes to 1 - z1 ~z1, which is not holomorphic
    BPoly2 nf = normal_form(mono(0, 0, 1, 1));
    CHECK(!moments_vanish(nf));
    CHECK(moment_symbolic(nf, 0) == ParamPoly::monomial(1, 1, GaussRational(1)));

    CHECK_THROWS_AS(moments_vanish(mono(0, 0, 1, 1)), std::invalid_argument);
}

TEST_CASE("truncation bound: monomials with k + p <= N have zero moment") {
    for (const auto& mo : ht::normal_monomials(5))
        for (unsigned N = mo.k + mo.p; N <= 6; ++N)
            CHECK(param_is_zero(moment_symbolic(BPoly2::monomial(mo, GaussRational(3)), N)));
}
