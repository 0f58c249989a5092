#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <holoext/points.hpp>
#include <holoext/slicing.hpp>

#include "helpers.hpp"

using namespace holoext;
namespace ht = holoext::testing;

namespace {

MonoN mono3(std::vector<unsigned> mu, std::vector<unsigned> nu) {
    return {std::move(mu), std::move(nu)};
}

BPolyN poly3(std::vector<std::pair<MonoN, int>> terms) {
    BPolyN f(3);
    for (auto& [mo, c] : terms) f.add_term(mo, GaussRational(c));
    return f;
}

BPolyN random_poly_nd(std::mt19937_64& g, unsigned n, unsigned bound, unsigned max_terms = 5) {
    auto basis = ht::normal_monomials_nd(n, bound);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    BPolyN f(n);
    for (unsigned j = 0, e = nterms(g); j < e; ++j)
        f.add_term(basis[pick(g)], ht::random_nonzero_gauss(g, 4));
    return f;
}

}  // namespace

TEST_CASE("n-dimensional normal form and holomorphy") {
    // sum of z_i ~z_i equals 1 on the sphere
    BPolyN sum = poly3({{mono3({1, 0, 0}, {1, 0, 0}), 1},
                        {mono3({0, 1, 0}, {0, 1, 0}), 1},
                        {mono3({0, 0, 1}, {0, 0, 1}), 1}});
    BPolyN nf = normal_form(sum);
    CHECK(nf == poly3({{mono3({0, 0, 0}, {0, 0, 0}), 1}}));
    CHECK(is_holomorphic(nf));

    CHECK(mono3({0, 0, 1}, {0, 0, 1}).weighted_degree() == 4);
    CHECK(mono3({1, 1, 0}, {0, 0, 1}).weighted_degree() == 4);
    CHECK(!is_holomorphic(poly3({{mono3({0, 0, 0}, {1, 0, 0}), 1}})));
}

TEST_CASE("slice restriction substitutes the plane coordinates") {
    SlicePlane e1{{GaussRational(1), GaussRational(0), GaussRational(0)}};

    // F = z3 restricts to zeta2 for every plane
    BPolyN z3 = poly3({{mono3({0, 0, 1}, {0, 0, 0}), 1}});
    CHECK(slice_restrict(z3, e1) == BPoly2::monomial({0, 0, 1, 0}, GaussRational(1)));

    // F = z1 on v = (3/5, 4/5 i, 0) restricts to (3/5) zeta1
    SlicePlane p{{GaussRational(Rational(3, 5)), GaussRational(Rational(0), Rational(4, 5)),
                  GaussRational(0)}};
    BPolyN z1 = poly3({{mono3({1, 0, 0}, {0, 0, 0}), 1}});
    CHECK(slice_restrict(z1, p) ==
          BPoly2::monomial({1, 0, 0, 0}, GaussRational(Rational(3, 5))));

    // F = |z1|^2 on e1 restricts to zeta1 ~zeta1
    BPolyN abs1 = poly3({{mono3({1, 0, 0}, {1, 0, 0}), 1}});
    CHECK(slice_restrict(abs1, e1) == BPoly2::monomial({1, 1, 0, 0}, GaussRational(1)));

    SlicePlane bad_unit{{GaussRational(1), GaussRational(1), GaussRational(0)}};
    CHECK_THROWS_AS(slice_restrict(z1, bad_unit), std::invalid_argument);
    SlicePlane bad_last{{GaussRational(0), GaussRational(0), GaussRational(1)}};
    CHECK_THROWS_AS(slice_restrict(z1, bad_last), std::invalid_argument);
}

TEST_CASE("default planes are exact unit vectors with nonzero slots") {
    auto planes = default_planes(3);
    CHECK(planes.size() == 12);
    for (const auto& plane : planes) {
        REQUIRE(plane.v.size() == 3);
        Rational norm;
        for (const auto& c : plane.v) norm += c.norm_sq();
        CHECK(norm == Rational(1));
        CHECK(plane.v[2].is_zero());
        CHECK(!plane.v[0].is_zero());
        CHECK(!plane.v[1].is_zero());
    }
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (std::size_t j = i + 1; j < planes.size(); ++j) CHECK(!(planes[i] == planes[j]));
}

TEST_CASE("slice family certification and gluing") {
    auto planes = default_planes(3);

    // F = z1 z2 + z3^3: every slice extends and the line restriction is zeta2^3
    BPolyN f = poly3({{mono3({1, 1, 0}, {0, 0, 0}), 1}, {mono3({0, 0, 3}, {0, 0, 0}), 1}});
    SliceFamilyReport rep = slice_certify_all(f, planes);
    CHECK(rep.all_extend);
    CHECK(rep.glue_ok);
    for (const auto& s : rep.slices) {
        REQUIRE(s.certificate.extends());
        CHECK(s.line_restriction ==
              std::map<unsigned, GaussRational>{{3, GaussRational(1)}});
    }

    // F = |z1|^2 with e1 among the planes: that slice reduces to the
    // 2-dimensional counterexample
    std::vector<SlicePlane> with_e1 = planes;
    with_e1.insert(with_e1.begin(),
                   SlicePlane{{GaussRational(1), GaussRational(0), GaussRational(0)}});
    BPolyN abs1 = poly3({{mono3({1, 0, 0}, {1, 0, 0}), 1}});
    SliceFamilyReport rep2 = slice_certify_all(abs1, with_e1);
    CHECK(!rep2.all_extend);
    CHECK(!rep2.slices.front().certificate.extends());

    auto g = ht::rng(71);
    for (int iter = 0; iter < 5; ++iter) {
        BPolyN seed = random_poly_nd(g, 3, 4);
        BPolyN hol(3);
        for (const auto& [mo, c] : seed.coeffs()) hol.add_term({mo.mu, {0, 0, 0}}, c);
        SliceFamilyReport rep3 = slice_certify_all(hol, planes);
        CHECK(rep3.all_extend);
        CHECK(rep3.glue_ok);
    }
}

TEST_CASE("certify_nd on the worked examples") {
    BPolyN sum = poly3({{mono3({1, 0, 0}, {1, 0, 0}), 1},
                        {mono3({0, 1, 0}, {0, 1, 0}), 1},
                        {mono3({0, 0, 1}, {0, 0, 1}), 1}});
    NCertificate c1 = certify_nd(sum);
    CHECK(c1.extends);
    CHECK(c1.extension == poly3({{mono3({0, 0, 0}, {0, 0, 0}), 1}}));
    CHECK(c1.cross_check_agrees);

    NCertificate c2 = certify_nd(poly3({{mono3({0, 0, 0}, {1, 0, 0}), 1}}));  // ~z1
    CHECK(!c2.extends);
    CHECK(c2.cross_check_agrees);
    REQUIRE(c2.slice_witness.has_value());
    CHECK(!c2.slice_witness->extends());

    NCertificate c3 = certify_nd(poly3({{mono3({1, 1, 1}, {0, 0, 0}), 1}}));  // z1 z2 z3
    CHECK(c3.extends);
    CHECK(c3.cross_check_agrees);
}

TEST_CASE("slice restriction commutes with evaluation") {
    auto g = ht::rng(73);
    auto planes = default_planes(3);
    auto pts = sphere_points(20);
    for (int iter = 0; iter < 10; ++iter) {
        BPolyN f = random_poly_nd(g, 3, 4);
        const SlicePlane& plane = planes[iter % planes.size()];
        BPoly2 sliced = slice_restrict(f, plane);
        for (const auto& [zeta1, zeta2] : pts) {
            std::vector<GaussRational> z{zeta1 * plane.v[0], zeta1 * plane.v[1], zeta2};
            CHECK(f.eval(z) == sliced.eval(zeta1, zeta2));
        }
    }
}

TEST_CASE("n-dimensional normal form agrees pointwise on the sphere") {
    auto g = ht::rng(101);
    auto planes = default_planes(3);
    auto pts = sphere_points(12);
    for (int iter = 0; iter < 8; ++iter) {
        // mixed exponents, usually not normal
        BPolyN f(3);
        std::uniform_int_distribution<unsigned> e(0, 2);
        for (int j = 0; j < 4; ++j)
            f.add_term({{e(g), e(g), e(g)}, {e(g), e(g), e(g)}}, ht::random_gauss(g, 3));
        BPolyN nf = normal_form(f);
        CHECK(is_normal_form(nf));
        CHECK(normal_form(nf) == nf);

        // exact C^3 sphere points: zeta1 * v + zeta2 * z_o for unit v
        const SlicePlane& plane = planes[static_cast<std::size_t>(iter) % planes.size()];
        for (const auto& [zeta1, zeta2] : pts) {
            std::vector<GaussRational> z{zeta1 * plane.v[0], zeta1 * plane.v[1], zeta2};
            Rational norm;
            for (const auto& zi : z) norm += zi.norm_sq();
            REQUIRE(norm == Rational(1));
            CHECK(f.eval(z) == nf.eval(z));
        }
    }
}

TEST_CASE("part (b) at small scale: slices decide the n-dimensional verdict") {
    auto planes = default_planes(3);
    for (const auto& mo : ht::normal_monomials_nd(3, 3)) {
        BPolyN f = BPolyN::monomial(mo, GaussRational(1));
        NCertificate cert = certify_nd(f);
        SliceFamilyReport rep = slice_certify_all(f, planes);
        CHECK(cert.extends == (rep.all_extend && rep.glue_ok));
        CHECK(cert.cross_check_agrees);
    }
}
