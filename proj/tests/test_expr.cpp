#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fewnomial/expr.hpp"
#include "test_util.hpp"

using namespace fewnomial;

TEST_CASE("parse univariate") {
    auto p = parse_sparse("1 - 3/2*x^1000000000000");
    REQUIRE(p.term_count() == 2);
    CHECK(p.terms()[0].exp == 0);
    CHECK(p.terms()[0].coeff == 1);
    CHECK(p.terms()[1].exp == Int("1000000000000"));
    CHECK(p.terms()[1].coeff == make_rat(-3, 2));

    CHECK(parse_sparse("1 - 3/2*x^1000000000000 + x^-2").term_count() == 3);
    CHECK(parse_sparse("x") == SparsePoly::monomial(Rat(1), Int(1)));
    CHECK(parse_sparse("-x^2 + x^2").is_zero());
    CHECK(parse_sparse("2*x*x^3") == SparsePoly::monomial(Rat(2), Int(4)));
}

TEST_CASE("parse multivariate infers the degree bound") {
    auto f = parse_multi("y^2 - t1 - t2", 2);
    CHECK(f.var_count() == 2);
    CHECK(f.degree_bound() == 2);
    CHECK(f.y_degree() == 2);
    CHECK(f.is_monic_in_y());

    auto g = parse_multi("y - t1*t2", 2);
    CHECK(g.degree_bound() == 1);
    CHECK(g.terms().size() == 2);

    CHECK(infer_var_count("y^2 - t1 - t2") == 2);
    CHECK(infer_var_count("y^2 - 5") == 0);
    CHECK(infer_var_count("t3*t11") == 11);
}

TEST_CASE("parse errors carry offsets") {
    CHECK_ERROR_KIND(parse_sparse("x^"), ErrorKind::ParseError);
    CHECK_ERROR_KIND(parse_sparse(""), ErrorKind::ParseError);
    CHECK_ERROR_KIND(parse_sparse("1 +"), ErrorKind::ParseError);
    CHECK_ERROR_KIND(parse_sparse("y"), ErrorKind::ParseError);
    CHECK_ERROR_KIND(parse_multi("x^2", 1), ErrorKind::ParseError);
    CHECK_ERROR_KIND(parse_multi("t5", 2), ErrorKind::ParseError);
    CHECK_ERROR_KIND(parse_multi("y^-1", 1), ErrorKind::ParseError);
    try {
        parse_sparse("x^");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
    }
}

TEST_CASE("print-parse round trip on canonical forms") {
    CHECK(to_string(SparsePoly{}) == "0");
    CHECK(to_string(parse_sparse("1 + x")) == "1 + x");

    std::mt19937_64 rng(9001);
    for (int i = 0; i < 150; ++i) {
        auto p = testutil::random_sparse(rng, 7, Int("1000000000000000000"), 9, true);
        CHECK(parse_sparse(to_string(p)) == p);
    }
    for (int i = 0; i < 80; ++i) {
        auto f = testutil::random_multi(rng, 2, 3, 6, 9);
        // the parsed value carries the inferred (minimal) degree bound
        auto back = parse_multi(to_string(f), 2);
        CHECK(back.var_count() == f.var_count());
        CHECK(back.terms() == f.terms());
        CHECK(parse_multi(to_string(back), 2) == back);
    }
}

TEST_CASE("rational coefficients survive the round trip") {
    auto p = SparsePoly::from_terms(
        {{Int(-2), make_rat(7, 3)}, {Int(0), make_rat(-1, 2)}, {Int(5), Rat(1)}});
    auto s = to_string(p);
    CHECK(parse_sparse(s) == p);
    CHECK(s == "7/3*x^-2 - 1/2 + x^5");
}
