#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <thread>

#include "fewnomial/dense_poly.hpp"
#include "fewnomial/error.hpp"
#include "fewnomial/multi_poly.hpp"
#include "fewnomial/sparse_poly.hpp"
#include "test_util.hpp"

using namespace fewnomial;

namespace {

SparsePoly sp(std::vector<std::pair<long, Rat>> terms) {
    std::vector<Term> raw;
    for (auto& [e, c] : terms) raw.push_back(Term{Int(e), c});
    return SparsePoly::from_terms(std::move(raw));
}

const Int kBig15("1000000000000000");
const Int kBig18("1000000000000000000");

} // namespace

TEST_CASE("normalize merges, cancels and sorts") {
    CHECK(SparsePoly::from_terms({{Int(2), Rat(1)}, {Int(2), Rat(-1)}}).is_zero());
    CHECK(SparsePoly::from_terms({{Int(5), Rat(3)}, {Int(0), Rat(1)}}) ==
          sp({{0, Rat(1)}, {5, Rat(3)}}));
    CHECK(SparsePoly::from_terms({{Int(7), make_rat(1, 2)}, {Int(7), make_rat(1, 2)}}) ==
          sp({{7, Rat(1)}}));
    // idempotence
    auto p = sp({{0, Rat(1)}, {5, Rat(3)}});
    CHECK(SparsePoly::from_terms({p.terms().begin(), p.terms().end()}) == p);
}

TEST_CASE("ring operations") {
    auto one_plus_x = sp({{0, Rat(1)}, {1, Rat(1)}});
    auto one_minus_x = sp({{0, Rat(1)}, {1, Rat(-1)}});
    CHECK(one_plus_x * one_minus_x == sp({{0, Rat(1)}, {2, Rat(-1)}}));

    auto huge = SparsePoly::monomial(Rat(1), kBig18);
    CHECK(huge * huge == SparsePoly::monomial(Rat(1), kBig18 * 2));

    auto q = sp({{0, Rat(1)}, {1, Rat(1)}, {2, Rat(1)}});
    CHECK(pow(q, 2) ==
          sp({{0, Rat(1)}, {1, Rat(2)}, {2, Rat(3)}, {3, Rat(2)}, {4, Rat(1)}}));
    // cross-check against the dense oracle
    CHECK(to_dense(pow(q, 2), 1000) == to_dense(q, 1000) * to_dense(q, 1000));
}

TEST_CASE("ord, deg, term_count") {
    auto p = SparsePoly::from_terms({{Int(0), Rat(1)}, {kBig15, Rat(1)}});
    CHECK(p.ord() == 0);
    CHECK(p.deg() == kBig15);
    CHECK(p.term_count() == 2);

    auto lau = SparsePoly::monomial(Rat(3), Int(-2));
    CHECK(lau.ord() == -2);
    CHECK(lau.deg() == -2);

    CHECK(SparsePoly{}.term_count() == 0);
    CHECK_ERROR_KIND(SparsePoly{}.ord(), ErrorKind::ZeroPolynomial);
    CHECK_ERROR_KIND(SparsePoly{}.deg(), ErrorKind::ZeroPolynomial);
}

TEST_CASE("truncate") {
    auto p = sp({{0, Rat(1)}, {1, Rat(1)}, {5, Rat(1)}});
    CHECK(truncate(p, Int(5)) == sp({{0, Rat(1)}, {1, Rat(1)}}));
    CHECK(truncate(p, p.deg() + 1) == p);
    CHECK(truncate(SparsePoly::monomial(Rat(1), kBig18), Int(1000000000)).is_zero());
}

TEST_CASE("series_inv geometric and constants") {
    auto u = sp({{0, Rat(1)}, {1, Rat(-1)}});
    CHECK(series_inv(u, Int(4), kUnlimitedBudget) ==
          sp({{0, Rat(1)}, {1, Rat(1)}, {2, Rat(1)}, {3, Rat(1)}}));
    CHECK(series_inv(SparsePoly(Rat(2)), Int(10), kUnlimitedBudget) ==
          SparsePoly(make_rat(1, 2)));
    CHECK_ERROR_KIND(series_inv(sp({{1, Rat(1)}}), Int(4), kUnlimitedBudget),
                     ErrorKind::NotAUnit);
    CHECK_ERROR_KIND(series_inv(SparsePoly{}, Int(4), kUnlimitedBudget),
                     ErrorKind::NotAUnit);
}

TEST_CASE("series_inv with huge spread exponents") {
    auto u = SparsePoly::from_terms(
        {{Int(0), Rat(1)}, {kBig15, Rat(1)}, {kBig18, Rat(1)}});
    Int cutoff = kBig18 * 2;
    auto v = series_inv(u, cutoff, 10000);
    CHECK(truncate(u * v, cutoff) == SparsePoly(Rat(1)));
    // terms sit exactly at the natural combinations i*10^15 + j*10^18 below
    // the cutoff, with signed multinomial coefficients (-1)^{i+j} C(i+j, i)
    // summed over all representations of each exponent
    std::map<Int, Rat> expected;
    for (unsigned long j = 0; j <= 2; ++j)
        for (unsigned long i = 0;; ++i) {
            Int e = kBig15 * i + kBig18 * j;
            if (e >= cutoff) break;
            Rat c = Rat(binomial(i + j, i));
            if ((i + j) % 2 == 1) c = -c;
            expected[e] += c;
        }
    std::vector<Term> expected_terms;
    for (auto& [e, c] : expected)
        if (c != 0) expected_terms.push_back(Term{e, c});
    CHECK(v == SparsePoly::from_terms(std::move(expected_terms)));
    // the same inverse at a tiny budget must report blowup
    CHECK_ERROR_KIND(series_inv(u, cutoff, 5), ErrorKind::TermBudgetExceeded);
}

TEST_CASE("dense conversions") {
    auto p = sp({{0, Rat(1)}, {3, Rat(1)}});
    CHECK(to_dense(p, 10).coeffs() ==
          std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(1)});
    CHECK_ERROR_KIND(to_dense(SparsePoly::monomial(Rat(1), Int("1000000000000")), 10000),
                     ErrorKind::DegreeCapExceeded);
    CHECK_ERROR_KIND(to_dense(SparsePoly::monomial(Rat(1), Int(-1)), 10),
                     ErrorKind::NegativeExponent);

    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        auto q = testutil::random_sparse(rng, 10, Int(300), 9);
        CHECK(from_dense(to_dense(q, 300)) == q);
    }
}

TEST_CASE("ring axioms against the dense oracle") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 60; ++i) {
        auto a = testutil::random_sparse(rng, 8, Int(300), 9);
        auto b = testutil::random_sparse(rng, 8, Int(300), 9);
        auto da = to_dense(a, 2000), db = to_dense(b, 2000);
        CHECK(to_dense(a + b, 2000) == da + db);
        CHECK(to_dense(a * b, 2000) == da * db);
        unsigned k = 2 + static_cast<unsigned>(testutil::uniform(rng, 3));
        CHECK(to_dense(pow(a, k), 2000) == pow(da, k));

        if (!a.is_zero() && !b.is_zero()) {
            CHECK((a * b).deg() == a.deg() + b.deg());
            CHECK((a * b).ord() == a.ord() + b.ord());
            CHECK((a * b).term_count() <= a.term_count() * b.term_count());
        }
        CHECK((a * b).is_canonical());
        CHECK((a + b).is_canonical());
    }
}

TEST_CASE("specialize on the worked instances") {
    // f = y^2 - t1 - t2
    MultiPoly f = MultiPoly::from_terms(
        2, 2,
        {{MultiKey{{0, 0}, 2}, Rat(1)},
         {MultiKey{{1, 0}, 0}, Rat(-1)},
         {MultiKey{{0, 1}, 0}, Rat(-1)}});
    auto c = specialize(f, {Int(1), Int(3)});
    REQUIRE(c.size() == 3);
    CHECK(c[0] == sp({{1, Rat(-1)}, {3, Rat(-1)}}));
    CHECK(c[1].is_zero());
    CHECK(c[2] == SparsePoly(Rat(1)));

    // f = y - t1*t2
    MultiPoly g = MultiPoly::from_terms(
        2, 1, {{MultiKey{{0, 0}, 1}, Rat(1)}, {MultiKey{{1, 1}, 0}, Rat(-1)}});
    auto cg = specialize(g, {Int(3), Int(5)});
    REQUIRE(cg.size() == 2);
    CHECK(cg[0] == sp({{8, Rat(-1)}}));
    CHECK(cg[1] == SparsePoly(Rat(1)));

    // f = y^2 - t1 with theta = (4)
    MultiPoly h = MultiPoly::from_terms(
        1, 2, {{MultiKey{{0}, 2}, Rat(1)}, {MultiKey{{1}, 0}, Rat(-1)}});
    auto ch = specialize(h, {Int(2)}, std::vector<Rat>{Rat(4)});
    REQUIRE(ch.size() == 3);
    CHECK(ch[0] == sp({{2, Rat(-4)}}));
    CHECK(ch[2] == SparsePoly(Rat(1)));

    CHECK_ERROR_KIND(specialize(f, {Int(1)}), ErrorKind::LengthMismatch);
}

TEST_CASE("specialize is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        auto f = testutil::random_multi(rng, 2, 2, 5, 4);
        auto g = testutil::random_multi(rng, 2, 2, 5, 4);
        std::vector<Int> n{Int(testutil::uniform_in(rng, 0, 12)),
                           Int(testutil::uniform_in(rng, 0, 12))};

        auto cs_sum = specialize(f + g, n);
        auto cs_f = specialize(f, n);
        auto cs_g = specialize(g, n);
        for (std::size_t j = 0; j < cs_sum.size(); ++j) {
            SparsePoly lhs = cs_sum[j];
            SparsePoly rhs = (j < cs_f.size() ? cs_f[j] : SparsePoly{}) +
                             (j < cs_g.size() ? cs_g[j] : SparsePoly{});
            CHECK(lhs == rhs);
        }

        // product: compare y-coefficient convolutions
        auto cs_prod = specialize(f * g, n);
        for (std::size_t j = 0; j < cs_prod.size(); ++j) {
            SparsePoly conv;
            for (std::size_t a = 0; a < cs_f.size(); ++a) {
                if (j < a) continue;
                std::size_t b = j - a;
                if (b >= cs_g.size()) continue;
                conv = conv + cs_f[a] * cs_g[b];
            }
            CHECK(cs_prod[j] == conv);
        }
    }
}

TEST_CASE("evaluation helper at special points") {
    auto p = sp({{0, Rat(1)}, {2, Rat(2)}, {3, Rat(-1)}});
    CHECK(p.eval_special(0) == 1);
    CHECK(p.eval_special(1) == 2);
    CHECK(p.eval_special(-1) == 4);
}

TEST_CASE("values are safely shared across threads") {
    // all operations are pure; concurrent use of shared inputs must agree
    // with the serial results
    std::mt19937_64 rng(31415);
    std::vector<SparsePoly> inputs;
    for (int i = 0; i < 8; ++i) inputs.push_back(testutil::random_sparse(rng, 8, Int(200), 9));
    std::vector<SparsePoly> serial;
    for (int i = 0; i < 8; ++i) serial.push_back(inputs[i] * inputs[(i + 1) % 8]);

    std::vector<SparsePoly> parallel(8);
    std::vector<std::thread> workers;
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&, w] {
            for (int i = w; i < 8; i += 4) parallel[i] = inputs[i] * inputs[(i + 1) % 8];
        });
    for (auto& t : workers) t.join();
    for (int i = 0; i < 8; ++i) CHECK(parallel[i] == serial[i]);
}
