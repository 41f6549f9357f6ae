#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fewnomial/resolvent.hpp"
#include "test_util.hpp"

using namespace fewnomial;

namespace {

DensePoly dp(std::vector<long> coeffs) {
    std::vector<Rat> c;
    for (long x : coeffs) c.emplace_back(x);
    return DensePoly::from_coeffs(std::move(c));
}

std::vector<DensePoly> constant_phi(std::vector<long> coeffs) {
    std::vector<DensePoly> v;
    for (long c : coeffs) v.push_back(DensePoly(Rat(c)));
    return v;
}

// Random monic phi of y-degree e with small polynomial coefficients in x.
std::vector<DensePoly> random_phi(std::mt19937_64& rng, int e) {
    std::vector<DensePoly> v;
    for (int i = 0; i < e; ++i) v.push_back(testutil::random_dense(rng, 2, 4));
    v.push_back(DensePoly(Rat(1)));
    return v;
}

long choose(long n, long k) {
    return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)).get_si();
}

} // namespace

TEST_CASE("worked examples on y^2 - 3y + 2") {
    auto phi = constant_phi({2, -3, 1});

    auto id = resolvent(phi, 1, 1);
    REQUIRE(id.size() == 3);
    CHECK(id[0] == dp({2}));
    CHECK(id[1] == dp({-3}));
    CHECK(id[2] == dp({1}));

    auto prod = resolvent(phi, 2, 2);  // product of roots: y - 2
    REQUIRE(prod.size() == 2);
    CHECK(prod[0] == dp({-2}));
    CHECK(prod[1] == dp({1}));

    auto sum = resolvent(phi, 1, 2);  // sum of roots: y - 3
    REQUIRE(sum.size() == 2);
    CHECK(sum[0] == dp({-3}));
    CHECK(sum[1] == dp({1}));
}

TEST_CASE("psi_11 is the identity for random monic phi") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        int e = 1 + static_cast<int>(testutil::uniform(rng, 4));
        auto phi = random_phi(rng, e);
        auto psi = resolvent(phi, 1, 1);
        REQUIRE(psi.size() == phi.size());
        for (std::size_t i = 0; i < phi.size(); ++i) CHECK(psi[i] == phi[i]);
    }
}

TEST_CASE("psi_ee is y minus the signed constant coefficient") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        int e = 1 + static_cast<int>(testutil::uniform(rng, 4));
        auto phi = random_phi(rng, e);
        auto psi = resolvent(phi, e, e);
        REQUIRE(psi.size() == 2);
        CHECK(psi[1] == DensePoly(Rat(1)));
        DensePoly expected = phi[0];
        if (e % 2 == 1) expected = -expected;
        CHECK(psi[0] == -expected);
    }
}

TEST_CASE("resolvent degree is always C(e,k)") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 12; ++trial) {
        int e = 2 + static_cast<int>(testutil::uniform(rng, 3));
        int k = 1 + static_cast<int>(testutil::uniform(rng, static_cast<std::uint64_t>(e)));
        int j = 1 + static_cast<int>(testutil::uniform(rng, static_cast<std::uint64_t>(k)));
        auto phi = random_phi(rng, e);
        auto psi = resolvent(phi, j, k);
        CHECK(static_cast<long>(psi.size()) - 1 == choose(e, k));
        CHECK(psi.back() == DensePoly(Rat(1)));
    }
}

TEST_CASE("splitting polynomial cross-check") {
    // phi = (y-1)(y-2)(y-3): psi_{1,2} has roots 3, 4, 5.
    auto phi = constant_phi({-6, 11, -6, 1});
    auto psi = resolvent(phi, 1, 2);
    REQUIRE(psi.size() == 4);
    DensePoly expect = dp({-3, 1}) * dp({-4, 1}) * dp({-5, 1});
    for (std::size_t i = 0; i < psi.size(); ++i)
        CHECK(psi[i] == DensePoly(expect.coeff(i)));

    // psi_{2,2} has roots 1*2, 1*3, 2*3 = 2, 3, 6.
    auto psi22 = resolvent(phi, 2, 2);
    DensePoly expect22 = dp({-2, 1}) * dp({-3, 1}) * dp({-6, 1});
    for (std::size_t i = 0; i < psi22.size(); ++i)
        CHECK(psi22[i] == DensePoly(expect22.coeff(i)));
}

TEST_CASE("resolvent guards") {
    auto phi = constant_phi({2, -3, 1});
    CHECK_ERROR_KIND(resolvent(phi, 1, 3), ErrorKind::CapExceeded);
    CHECK_ERROR_KIND(resolvent(phi, 0, 1), ErrorKind::CapExceeded);
    CHECK_ERROR_KIND(resolvent(constant_phi({2, -3, 2}), 1, 1), ErrorKind::NotMonic);
    std::vector<DensePoly> big(8, DensePoly(Rat(1)));
    CHECK_ERROR_KIND(resolvent(big, 1, 1), ErrorKind::CapExceeded);
}
