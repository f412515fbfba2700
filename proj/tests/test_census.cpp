#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "rootcensus/arith.hpp"
#include "rootcensus/census.hpp"
#include "rootcensus/errors.hpp"
#include "rootcensus/orders.hpp"
#include "rootcensus/poly.hpp"

using namespace rc;

namespace {

// ord_p(u) by repeated multiplication; u reduced and nonzero.
u64 slow_order(i64 u, u64 p) {
    u64 g = reduce(u, p), v = g, k = 1;
    while (v != 1) {
        v = mul_mod(v, g, p);
        ++k;
    }
    return k;
}

struct Brute {
    u64 baseline = 0, hits = 0;
};

Brute brute_fixed(i64 u, u64 x, u64 q = 1, u64 a = 0) {
    Brute b;
    for (u64 p = 2; p <= x; ++p) {
        if (!is_prime(p) || p % q != a % q || reduce(u, p) == 0) continue;
        ++b.baseline;
        b.hits += slow_order(u, p) == p - 1;
    }
    return b;
}

}  // namespace

TEST_CASE("parse_poly and eval") {
    CHECK(parse_poly("x^2+1") == Poly({1, 0, 1}));
    CHECK(parse_poly("4*x^2 + 1") == Poly({1, 0, 4}));
    CHECK(parse_poly("326x^2+3") == Poly({3, 0, 326}));
    CHECK(parse_poly("x^3-x") == Poly({0, -1, 0, 1}));
    CHECK(parse_poly("x^4+1").eval(3) == 82);
    CHECK(parse_poly("x^3+2").eval_mod(4, 5) == 1);
    CHECK_THROWS_AS(parse_poly("x^^2"), DomainError);
}

TEST_CASE("fixed_divisor") {
    CHECK(fixed_divisor(parse_poly("x^2+1")) == 1);
    CHECK(fixed_divisor(parse_poly("x^2+x+2")) == 2);
    CHECK(fixed_divisor(parse_poly("x^3+3x^2+2x+3")) == 3);
    CHECK(fixed_divisor(parse_poly("x^3+2")) == 1);
}

TEST_CASE("root_count examples") {
    CHECK(root_count(parse_poly("x^2+1"), 5) == 2);
    CHECK(root_count(parse_poly("x^2+1"), 3) == 0);
    CHECK(root_count(parse_poly("x^2+1"), 2) == 1);
    CHECK(root_count(parse_poly("x^3+2"), 5) == 1);
    CHECK(root_count(parse_poly("x^3+2"), 7) == 0);
    CHECK(root_count(parse_poly("x^3+2"), 31) == 3);
}

TEST_CASE("root_count gcd agrees with scan") {
    const Poly fams[] = {parse_poly("x^2+1"), parse_poly("x^3+2"), parse_poly("x^4+1"), parse_poly("4x^2+1"),
                         parse_poly("x^3-x")};
    for (u64 p : sieve_primes(3000))
        for (const auto& f : fams) REQUIRE(root_count(f, p) == root_count_scan(f, p));
}

TEST_CASE("fixed root census examples") {
    auto r = census_fixed_root(2, 30);
    CHECK(r.hits == 6);  // 3 5 11 13 19 29
    CHECK(r.baseline == 9);
    CHECK(census_fixed_root(10, 100).hits == 9);
    CHECK(census_fixed_root(2, 30, 4, 1).hits == 3);
    CHECK_THROWS_AS(census_fixed_root(2, 30, 4, 2), DomainError);
    CHECK_THROWS_AS(census_fixed_root(0, 30), DomainError);
}

TEST_CASE("fixed root census against brute force") {
    for (i64 u : {2, 3, 5, 6, 7, 10, -1, -2, -3, 4, 9, 12}) {
        auto b = brute_fixed(u, 3000);
        auto r = census_fixed_root(u, 3000);
        CHECK(r.baseline == b.baseline);
        CHECK(r.hits == b.hits);
    }
    for (u64 q : {3, 4, 8, 12})
        for (u64 a = 1; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            auto b = brute_fixed(2, 5000, q, a);
            auto r = census_fixed_root(2, 5000, q, a);
            CHECK(r.baseline == b.baseline);
            CHECK(r.hits == b.hits);
        }
}

TEST_CASE("census oracle values") {
    auto r = census_fixed_root(2, 1000000);
    CHECK(r.baseline == 78497);
    CHECK(r.hits == 29341);
    r = census_fixed_root(2, 1000000, 4, 1);
    CHECK(r.baseline == 39175);
    CHECK(r.hits == 14699);
    r = census_fixed_root(-3, 100000);
    CHECK(r.baseline == 9591);
    CHECK(r.hits == 4337);
    r = census_fixed_root(6, 100000);
    CHECK(r.baseline == 9590);
    CHECK(r.hits == 3585);
    r = census_squarefree_totient(2, 100000);
    CHECK(r.baseline == 3598);
    CHECK(r.hits == 1444);
    r = census_simultaneous({2, 3}, 100000);
    CHECK(r.baseline == 9590);
    CHECK(r.hits == 1416);
    r = census_quadratic_residue(4, 100000);
    CHECK(r.baseline == 9591);
    CHECK(r.hits == 5412);
}

TEST_CASE("other census families, small x") {
    CHECK(census_simultaneous({2, 3}, 30).hits == 3);  // 5 29 and 19
    CHECK(census_quadratic_residue(4, 12).hits == 4);  // 3 5 7 11
    auto q9 = census_quadratic_residue(9, 30);
    u64 want = 0;
    for (u64 p : sieve_primes(30))
        if (p > 3) want += slow_order(9, p) == (p - 1) / 2;
    CHECK(q9.hits == want);
    CHECK(census_squarefree_totient(2, 10).baseline == 2);  // 3 7
    CHECK_THROWS_AS(census_simultaneous({}, 30), DomainError);
    CHECK_THROWS_AS(census_quadratic_residue(12, 30), DomainError);
    CHECK_THROWS_AS(census_quadratic_residue(16, 30), DomainError);
}

TEST_CASE("poly census") {
    PolyCensusOptions opt;
    opt.criterion = Criterion::LeastPrimitiveRoot;
    opt.bound_on = BoundOn::Argument;
    opt.threads = 1;
    auto rows = poly_census(parse_poly("4x^2+1"), 2, 10000, opt);
    REQUIRE(rows.size() == 4);
    CHECK(rows.back().baseline == 33);
    CHECK(rows.back().hits == 12);
    CHECK(rows.back().ratio == doctest::Approx(12.0 / 33));
    CHECK(rows.back().c_estimate == doctest::Approx(0.552620).epsilon(1e-6));

    auto plain = poly_census(parse_poly("x^2+1"), 2, 10000);
    CHECK(plain.back().baseline == 19);

    auto cubic = poly_census(parse_poly("x^3+2"), 2, 1000000, opt);
    CHECK(cubic.back().baseline == 10);
    CHECK(cubic.back().hits == 2);
}

TEST_CASE("poly census rows are monotone and match a brute count") {
    const Poly f = parse_poly("x^2+1");
    auto rows = poly_census(f, 3, 1000000);
    for (size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].baseline >= rows[i - 1].baseline);
        CHECK(rows[i].hits >= rows[i - 1].hits);
        CHECK(rows[i].hits <= rows[i].baseline);
    }
    u64 b = 0, h = 0;
    for (u64 n = 1; n * n + 1 <= 1000000; ++n) {
        u64 v = n * n + 1;
        if (!is_prime(v)) continue;
        ++b;
        if (v % 3 && slow_order(3, v) == v - 1) ++h;
    }
    CHECK(rows.back().baseline == b);
    CHECK(rows.back().hits == h);
}

TEST_CASE("poly census preconditions") {
    CHECK_THROWS_AS(poly_census(parse_poly("x^2+x+2"), 2, 1000), DomainError);
    CHECK_THROWS_AS(poly_census(parse_poly("x^2+1"), 1, 1000), DomainError);
    CHECK_THROWS_AS(poly_census(parse_poly("x^2+1"), 0, 1000), DomainError);
    CHECK_THROWS_AS(poly_census(parse_poly("7"), 2, 1000), DomainError);
    CHECK_THROWS_AS(poly_census(parse_poly("-x^2+1"), 2, 1000), DomainError);
}

TEST_CASE("parallel census equals serial") {
    for (int t : {1, 2, 4, 8}) {
        CHECK(census_fixed_root(2, 3000000, 1, 0, t) == census_fixed_root_serial(2, 3000000));
        CHECK(census_fixed_root(5, 3000000, 8, 3, t) == census_fixed_root_serial(5, 3000000, 8, 3));
        PolyCensusOptions opt;
        opt.threads = t;
        for (auto c : {Criterion::PrimitiveRoot, Criterion::LeastPrimitiveRoot}) {
            opt.criterion = c;
            CHECK(poly_census(parse_poly("x^3+2"), 3, 1000000000000ULL, opt) ==
                  poly_census_serial(parse_poly("x^3+2"), 3, 1000000000000ULL, opt));
        }
    }
}

TEST_CASE("low density construction is falsified by the verification scan") {
    try {
        low_density_poly(3, LowDensityVariant::Lambda);
        FAIL("expected a prime value");
    } catch (const AlgorithmFalsified& e) {
        CHECK(e.result.n == 6);
        CHECK(e.result.exponent == 2);
        CHECK(e.result.poly() == parse_poly("x^2+5"));
        CHECK(std::find(e.prime_at.begin(), e.prime_at.end(), 6) != e.prime_at.end());
        CHECK(std::find(e.prime_at.begin(), e.prime_at.end(), 12) != e.prime_at.end());
    }
    try {
        low_density_poly(5, LowDensityVariant::Lambda);
        FAIL("expected a prime value");
    } catch (const AlgorithmFalsified& e) {
        CHECK(e.result.n == 30);
        CHECK(e.result.exponent == 4);
        CHECK(std::find(e.prime_at.begin(), e.prime_at.end(), 90) != e.prime_at.end());
    }
    CHECK_THROWS_AS(low_density_poly(1, LowDensityVariant::Phi), DomainError);
}
