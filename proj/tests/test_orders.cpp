#include <doctest.h>

#include <cmath>

#include "rootcensus/errors.hpp"
#include "rootcensus/orders.hpp"

using namespace rc;

namespace {

u64 brute_order(u64 u, u64 p) {
    u64 k = 1, v = u % p;
    while (v != 1) {
        v = v * u % p;
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("multiplicative_order examples") {
    CHECK(multiplicative_order(10, 7) == 6);
    CHECK(multiplicative_order(10, 11) == 2);
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(2, 1093) == 364);
    CHECK(multiplicative_order(3, 1000000007ULL) == 500000003ULL);
    CHECK(multiplicative_order(-1, 13) == 2);
    CHECK_THROWS_AS(multiplicative_order(14, 7), DomainError);
}

TEST_CASE("order against power enumeration for p <= 500") {
    for (u64 p : sieve_primes(500))
        for (u64 u = 1; u < p; ++u) {
            u64 k = multiplicative_order(u, p);
            REQUIRE(k == brute_order(u, p));
            REQUIRE((p - 1) % k == 0);
        }
}

TEST_CASE("primitive root test matches the order for p <= 10^4, u <= 50") {
    for (u64 p : sieve_primes(10000))
        for (u64 u = 1; u <= 50; ++u) {
            if (u % p == 0) continue;
            REQUIRE(is_primitive_root(u, p) == (multiplicative_order(u, p) == p - 1));
        }
    CHECK(is_primitive_root(2, 11));
    CHECK_FALSE(is_primitive_root(2, 7));
    for (u64 p : sieve_primes(2000))
        if (p > 3) REQUIRE_FALSE(is_primitive_root(4, p));
}

TEST_CASE("least primitive root") {
    CHECK(least_primitive_root(7) == 3);
    CHECK(least_primitive_root(2) == 1);
    CHECK(least_primitive_root(41) == 6);
    CHECK(least_primitive_root(191) == 19);
    CHECK(least_primitive_root(409) == 21);
    CHECK(least_primitive_root(1000003) == 2);
}

TEST_CASE("primitive d-th residues") {
    CHECK(is_primitive_dth_residue(4, 11, 2));
    CHECK(is_primitive_dth_residue(3, 7, 1));
    CHECK_FALSE(is_primitive_dth_residue(1, 13, 3));
    CHECK_THROWS_AS(is_primitive_dth_residue(2, 11, 3), DomainError);
    for (u64 p : sieve_primes(200))
        for (u64 d = 1; d < p; ++d) {
            if ((p - 1) % d) continue;
            for (u64 u = 1; u < p; ++u) REQUIRE(is_primitive_dth_residue(u, p, d) == (brute_order(u, p) == (p - 1) / d));
        }
}

TEST_CASE("character-sum indicators equal the brute-force indicator for p <= 200") {
    CHECK(char_indicator_divisor(3, 7) == 1);
    CHECK(char_indicator_divisor(2, 7) == 0);
    CHECK(char_indicator_divisor(2, 5) == 1);
    CHECK(char_indicator_divisorfree(3, 7) == 1);
    CHECK(char_indicator_divisorfree(2, 7) == 0);
    for (u64 p : sieve_primes(200)) {
        if (p == 2) continue;
        for (u64 u = 1; u < p; ++u) {
            double want = brute_order(u, p) == p - 1 ? 1 : 0;
            REQUIRE(char_indicator_divisor(static_cast<i64>(u), p) == want);
            REQUIRE(char_indicator_divisorfree(static_cast<i64>(u), p) == want);
        }
    }
}

TEST_CASE("exponential sum maxima") {
    CHECK(exp_sum_max(7).max_abs <= 2 + 1e-12);
    auto e101 = exp_sum_max(101);
    CHECK(e101.max_abs < 2 * std::pow(101.0, 7.0 / 8));
    CHECK(exp_sum_max(499).max_abs < static_cast<double>(totient(498)));
}

TEST_CASE("relative order series") {
    auto s = relative_order_series(2, 20);
    std::vector<std::pair<u64, double>> got;
    for (const auto& r : s) got.emplace_back(r.p, r.relative_order());
    std::vector<std::pair<u64, double>> want{{3, 1}, {5, 1}, {7, 0.5}, {11, 1}, {13, 1}, {17, 0.5}, {19, 1}};
    CHECK(got == want);
    for (const auto& r : relative_order_series(6, 100000)) {
        REQUIRE(r.p % 2 != 0);
        REQUIRE(r.p % 3 != 0);
        REQUIRE((r.p - 1) % r.order == 0);
        REQUIRE(r.relative_order() == doctest::Approx(1.0 / static_cast<double>(r.index())));
    }
}

TEST_CASE("relative order series: parallel equals serial") {
    for (i64 u : {2, -3, 10}) {
        auto a = relative_order_series(u, 200000, 4), b = relative_order_series_serial(u, 200000);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            REQUIRE(a[i].p == b[i].p);
            REQUIRE(a[i].order == b[i].order);
        }
    }
}

TEST_CASE("mean relative order over u <= 200, p <= 10^5") {
    // Squares and other perfect powers among u pull the mean below prod (1 - p/(p^3 - 1)) = 0.57596;
    // nowhere near 0.6477.
    long double sum = 0;
    u64 count = 0;
    for (i64 u = 1; u <= 200; ++u)
        for (const auto& r : relative_order_series(u, 100000)) {
            sum += r.relative_order();
            ++count;
        }
    CHECK(count == 1918031);
    CHECK(static_cast<double>(sum / count) == doctest::Approx(0.5567907142).epsilon(1e-9));
}
