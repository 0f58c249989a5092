#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <holoext/parse.hpp>
#include <holoext/report.hpp>

#include "helpers.hpp"

using namespace holoext;
namespace ht = holoext::testing;

TEST_CASE("grammar accepts the documented forms") {
    BPoly2 f = parse_poly2("z1*~z1");
    CHECK(f == BPoly2::monomial({1, 1, 0, 0}, GaussRational(1)));

    BPoly2 g = parse_poly2("(3/2)*z1^2*z2 - ~z2");
    CHECK(g.coeff({2, 0, 1, 0}) == GaussRational(Rational(3, 2)));
    CHECK(g.coeff({0, 0, 0, 1}) == GaussRational(-1));
    CHECK(g.term_count() == 2);

    BPolyN h = parse_polyn("z1*z3 + (0+1i)*~z2", 3);
    CHECK(h.coeffs().at({{1, 0, 1}, {0, 0, 0}}) == GaussRational(1));
    CHECK(h.coeffs().at({{0, 0, 0}, {0, 1, 0}}) == GaussRational::i());

    CHECK(parse_poly2("0").is_zero());
    CHECK(parse_poly2("- z1 + z1").is_zero());
    CHECK(parse_poly2("2i*z1") == BPoly2::monomial({1, 0, 0, 0}, GaussRational::i() * GaussRational(2)));
}

TEST_CASE("gaussian literals") {
    CHECK(parse_gaussian("1") == GaussRational(1));
    CHECK(parse_gaussian("-3/4") == GaussRational(Rational(-3, 4)));
    CHECK(parse_gaussian("0+1i") == GaussRational::i());
    CHECK(parse_gaussian("1/2-2/3i") == GaussRational(Rational(1, 2), Rational(-2, 3)));
    CHECK(parse_gaussian("2i") == GaussRational(Rational(0), Rational(2)));
    CHECK(parse_gaussian(" 1+0i ") == GaussRational(1));
}

TEST_CASE("errors carry positions and causes") {
    CHECK_THROWS_AS(parse_poly2("z1 +"), ParseError);
    CHECK_THROWS_AS(parse_poly2("z1 ** z2"), ParseError);

    try {
        parse_poly2("z3 + z1");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 1);  // index digit of the unknown variable
        CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
    }

    try {
        parse_poly2("1.5*z1");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("non-rational") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_polyn("z4", 3), ParseError);
    CHECK_THROWS_AS(parse_gaussian("1/0"), ParseError);
}

TEST_CASE("parse-print-parse is the identity") {
    auto g = ht::rng(97);
    for (int iter = 0; iter < 100; ++iter) {
        BPoly2 f = ht::random_normal_poly(g, 6, 5);
        std::string printed = to_string(f);
        BPoly2 reparsed = parse_poly2(printed);
        CHECK(reparsed == f);
        CHECK(to_string(reparsed) == printed);  // printing is idempotent
    }
    for (int iter = 0; iter < 40; ++iter) {
        auto basis = ht::normal_monomials_nd(3, 4);
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        BPolyN f(3);
        for (int j = 0; j < 4; ++j) f.add_term(basis[pick(g)], ht::random_nonzero_gauss(g, 4));
        std::string printed = to_string(f);
        CHECK(parse_polyn(printed, 3) == f);
        CHECK(to_string(parse_polyn(printed, 3)) == printed);
    }
}

TEST_CASE("printed constants and coefficients round-trip") {
    BPoly2 c = BPoly2::constant(GaussRational(Rational(0), Rational(-2, 3)));
    CHECK(to_string(c) == "(0-2/3i)");
    CHECK(parse_poly2(to_string(c)) == c);

    BPoly2 z = BPoly2::monomial({1, 0, 0, 0}, GaussRational(-1));
    CHECK(to_string(z) == "-z1");
    CHECK(parse_poly2(to_string(z)) == z);

    CHECK(to_string(BPoly2{}) == "0");
    CHECK(to_string(ParamPoly::monomial(1, 1, GaussRational(1))) == "a*~a");
}

TEST_CASE("JSON reports are stable under re-serialization") {
    Certificate obstructed{Certificate::Status::Obstructed, {},
                           Obstruction{2, 1, 0, 0, GaussRational(-1)}};
    std::string rep = certificate_report(obstructed);
    CHECK(reserialize_report(rep) == rep);
    CHECK(rep.find("\"status\": \"obstructed\"") != std::string::npos);
    CHECK(rep.find("\"coefficient\": \"-1\"") != std::string::npos);

    Certificate extends{Certificate::Status::Extends,
                        BPoly2::monomial({2, 0, 0, 0}, GaussRational(1)), std::nullopt};
    std::string rep2 = certificate_report(extends);
    CHECK(reserialize_report(rep2) == rep2);
    CHECK(rep2.find("\"extension\": \"z1^2\"") != std::string::npos);

    std::string rep3 = moment_report(GaussRational(1), 0, GaussRational(Rational(1, 2)));
    CHECK(reserialize_report(rep3) == rep3);
    CHECK(rep3.find("\"mu\": \"1/2\"") != std::string::npos);
}
