#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "rootcensus/arith.hpp"
#include "rootcensus/errors.hpp"
#include "rootcensus/poly.hpp"

using namespace rc;

namespace {

bool trial_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("is_prime small and adversarial") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(561));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to 2, 3, 5, 7
    CHECK(is_prime(2305843009213693951ULL));
    CHECK(is_prime(1000000000000000009ULL));
    CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551557ULL - 2));
    for (u64 n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == trial_prime(n));
}

TEST_CASE("is_prime agrees with factorize on a large input") {
    const u64 n = 4727839468229346563ULL;
    auto f = factorize(n);
    CHECK(f.product() == n);
    CHECK(is_prime(n) == (f.factors.size() == 1 && f.factors[0].second == 1));
}

TEST_CASE("sieve and prime_pi") {
    CHECK(prime_pi(100) == 25);
    CHECK(prime_pi(1'000'000) == 78498);
    CHECK(prime_pi(10'000'000) == 664579);
    auto ps = sieve_primes(30);
    CHECK(ps == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    std::vector<u64> seg;
    for_each_prime(1'000'000'000ULL, 1'000'000'200ULL, [&](u64 p) { seg.push_back(p); });
    for (u64 p : seg) CHECK(is_prime(p));
    CHECK(seg.front() == 1000000007ULL);
    CHECK_THROWS_AS(sieve_primes(kSieveCap + 1), CapacityError);
}

TEST_CASE("factorize") {
    auto f = factorize(1092);
    CHECK(f.factors == std::vector<std::pair<u64, unsigned>>{{2, 2}, {3, 1}, {7, 1}, {13, 1}});
    CHECK(factorize(1).factors.empty());
    auto g = factorize(600851475143ULL);
    CHECK(g.primes() == std::vector<u64>{71, 839, 1471, 6857});
    const u64 semi = 4294967291ULL * 4294967279ULL;  // two primes near 2^32
    auto h = factorize(semi);
    CHECK(h.primes() == std::vector<u64>{4294967279ULL, 4294967291ULL});
    auto sq = factorize(1000000007ULL * 1000000007ULL);
    CHECK(sq.factors == std::vector<std::pair<u64, unsigned>>{{1000000007ULL, 2}});
    CHECK(factorize(24739954287740860ULL).product() == 24739954287740860ULL);
    CHECK(factorize(12).divisors() == std::vector<u64>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("factorize multiplies back for n <= 10^5") {
    for (u64 n = 1; n <= 100000; ++n) {
        auto f = factorize(n);
        REQUIRE(f.product() == n);
        for (auto [p, e] : f.factors) REQUIRE(is_prime(p));
    }
}

TEST_CASE("jacobi") {
    CHECK(jacobi(2, 7) == 1);
    CHECK(jacobi(-1, 7) == -1);
    CHECK(jacobi(0, 1) == 1);
    CHECK(jacobi(30, 15) == 0);
    CHECK_THROWS_AS(jacobi(3, 8), DomainError);
    for (u64 p : sieve_primes(10000)) {
        if (p == 2) continue;
        for (u64 a = 1; a < p; a += (p > 500 ? 37 : 1)) {
            u64 e = mod_pow(a, (p - 1) / 2, p);
            int want = e == 1 ? 1 : -1;
            REQUIRE(jacobi(a, p) == want);
        }
    }
}

TEST_CASE("2 is a square modulo primes n^4 + 1") {
    const Poly f = parse_poly("x^4+1");
    for (u64 n = 2; n < 3000; ++n) {
        u64 p = static_cast<u64>(f.eval(n));
        if (is_prime(p)) REQUIRE(jacobi(2, p) == 1);
    }
}

TEST_CASE("mod_pow") {
    CHECK(mod_pow(10, 6, 7) == 1);
    CHECK(mod_pow(2, 1092, 1093 * 1093) == 1);
    CHECK(mod_pow(7, 4, 25) == 1);
    CHECK(mod_pow(-2, 3, 7) == 6);
    CHECK(mod_pow(5, 0, 1) == 0);
    CHECK(mod_pow(3, 18446744073709551556ULL, 18446744073709551557ULL) == 1);
}

TEST_CASE("iroot and is_square") {
    CHECK(iroot(999, 3) == 9);
    CHECK(iroot(1000, 3) == 10);
    CHECK(iroot(~0ULL, 2) == 4294967295ULL);
    CHECK(iroot(1'000'000'000'000'000'000ULL, 4) == 31622);
    CHECK(is_square(1 << 20));
    CHECK_FALSE(is_square(2));
}

TEST_CASE("totient, mobius and carmichael against definitions") {
    CHECK(totient(9) == 6);
    CHECK(mobius(12) == 0);
    CHECK(carmichael(30) == 4);
    CHECK(totient(1'000'000'000'000ULL) == 400'000'000'000ULL);
    CHECK(carmichael(2016) == 24);
    for (u64 n = 1; n <= 2000; ++n) {
        u64 phi = 0;
        for (u64 k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
        REQUIRE(totient(n) == phi);
        // lambda: least m with k^m = 1 for every unit k
        u64 lam = 1;
        for (u64 k = 1; k < n || (n == 1 && k == 1); ++k) {
            if (std::gcd(k, n) != 1) continue;
            u64 m = 1, v = k % n;
            while (v != 1 % n) {
                v = v * k % n;
                ++m;
            }
            lam = std::lcm(lam, m);
            if (n == 1) break;
        }
        REQUIRE(carmichael(n) == lam);
        int mu = 1;
        u64 r = n;
        for (u64 q = 2; q * q <= r; ++q)
            if (r % q == 0) {
                r /= q;
                if (r % q == 0) {
                    mu = 0;
                    break;
                }
                mu = -mu;
            }
        if (mu != 0 && r > 1) mu = -mu;
        REQUIRE(mobius(n) == mu);
    }
}

TEST_CASE("sum of phi(n)/n is 6x/pi^2 + O(log x)") {
    for (u64 x : {1000u, 10000u, 100000u}) {
        long double s = 0;
        for (u64 n = 1; n <= x; ++n) s += static_cast<long double>(totient(n)) / n;
        const long double pi = std::numbers::pi_v<long double>;
        CHECK(std::fabs(s - 6 * x / (pi * pi)) <= 20 * std::log(static_cast<long double>(x)));
    }
}
