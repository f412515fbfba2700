#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "rootcensus/arith.hpp"
#include "rootcensus/elliptic.hpp"
#include "rootcensus/errors.hpp"

using namespace rc;

namespace {

u64 brute_point_order(const Curve& E, const Point& P) {
    u64 k = 1;
    Point Q = P;
    while (!Q.inf) {
        Q = ec_add(E, Q, P);
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("curve orders from the examples") {
    CHECK(curve_order(make_curve(0, 2, 13)) == 19);
    CHECK(curve_order(make_curve(0, 2, 19)) == 13);
    CHECK(curve_order(make_curve(-1, 0, 5)) == 8);
    CHECK(curve_order_bsgs(make_curve(1, 1, 1000003)) == 1000727);
    CHECK_THROWS_AS(make_curve(0, 2, 3), Unsupported);
    CHECK_THROWS_AS(make_curve(0, 2, 15), DomainError);
}

TEST_CASE("group law on y^2 = x^3 - x over F_5") {
    auto E = make_curve(-1, 0, 5);
    CHECK(ec_add(E, Point::affine(0, 0), Point::affine(1, 0)) == Point::affine(4, 0));
    auto P = Point::affine(2, 1);
    REQUIRE(on_curve(E, P));
    CHECK(ec_add(E, P, Point::identity()) == P);
    CHECK(ec_add(E, P, ec_neg(E, P)).inf);
    CHECK(ec_mul(E, 2, Point::affine(0, 0)).inf);
    CHECK(ec_mul(E, 0, P).inf);
    CHECK(point_order(E, Point::affine(0, 0)) == 2);
    auto g = group_structure(E);
    CHECK((g.n == 8 && g.d == 2 && g.e == 4));
    CHECK_FALSE(is_cyclic(E));
    for (const auto& Q : enumerate_points(E)) CHECK_FALSE(is_primitive_point(E, Q));
    CHECK_THROWS_AS(ec_add(E, Point::affine(2, 2), P), DomainError);
}

TEST_CASE("prime-order group y^2 = x^3 + 2 over F_13") {
    auto E = make_curve(0, 2, 13);
    CHECK(is_cyclic(E));
    auto g = group_structure(E);
    CHECK((g.d == 1 && g.e == 19));
    for (const auto& P : enumerate_points(E)) {
        CHECK(ec_mul(E, 19, P).inf);
        if (P.inf) continue;
        CHECK(point_order(E, P) == 19);
        CHECK(is_primitive_point(E, P));
        CHECK(primitive_point_test_division(E, P));
    }
}

TEST_CASE("torsion point (2,3) on y^2 = x^3 + 1") {
    for (u64 p : {5, 7, 11, 13}) {
        auto E = make_curve(0, 1, p);
        auto P = Point::affine(2, 3);
        CHECK(ec_mul(E, 6, P).inf);
        CHECK(6 % point_order(E, P) == 0);
    }
    auto E = make_curve(0, 1, 7);
    CHECK(division_value(E, 6, Point::affine(2, 3)) == 0);
}

TEST_CASE("group law properties on random curves") {
    std::mt19937_64 gen(7);
    const auto ps = sieve_primes(1000);
    int curves = 0;
    while (curves < 20) {
        u64 p = ps[5 + gen() % (ps.size() - 5)];
        auto E = make_curve(static_cast<i64>(gen() % p), static_cast<i64>(gen() % p), p);
        if (E.singular) continue;
        ++curves;
        auto pts = enumerate_points(E);
        for (int t = 0; t < 200; ++t) {
            const auto& P = pts[gen() % pts.size()];
            const auto& Q = pts[gen() % pts.size()];
            const auto& R = pts[gen() % pts.size()];
            REQUIRE(ec_add(E, P, Q) == ec_add(E, Q, P));
            REQUIRE(ec_add(E, ec_add(E, P, Q), R) == ec_add(E, P, ec_add(E, Q, R)));
            REQUIRE(on_curve(E, ec_add(E, P, Q)));
        }
        for (int t = 0; t < 50; ++t) CHECK(ec_mul(E, pts.size(), pts[gen() % pts.size()]).inf);
    }
}

TEST_CASE("orders and structures against enumeration, p < 500") {
    for (u64 p : sieve_primes(500)) {
        if (p <= 3) continue;
        for (i64 a = 0; a < 6; ++a)
            for (i64 b = 0; b < 6; ++b) {
                auto E = make_curve(a, b, p);
                if (E.singular) continue;
                u64 n = enumerate_points(E).size();
                REQUIRE(curve_order_legendre(E) == n);
                REQUIRE(curve_order_bsgs(E) == n);
                REQUIRE(std::fabs(static_cast<double>(p + 1) - static_cast<double>(n)) <= 2 * std::sqrt(double(p)));
                auto g = group_structure(E);
                auto h = group_structure_enumerate(E);
                REQUIRE((g.n == h.n && g.d == h.d && g.e == h.e));
                REQUIRE(g.e % g.d == 0);
                REQUIRE((p - 1) % g.d == 0);
                auto c = cyclicity(E);
                CHECK(c.cyclic == (g.d == 1));
                if (c.gcd_criterion) CHECK(c.cyclic);
            }
    }
}

TEST_CASE("point orders by peeling match repeated addition") {
    for (u64 p : {101, 211, 307}) {
        auto E = make_curve(3, 7, p);
        for (const auto& P : enumerate_points(E)) {
            u64 k = point_order(E, P);
            REQUIRE(k == brute_point_order(E, P));
            REQUIRE(is_primitive_point(E, P) == (k == curve_order(E)));
        }
    }
}

TEST_CASE("division polynomials") {
    auto E = make_curve(-1, 0, 5);
    CHECK(division_value(E, 2, Point::affine(0, 0)) == 0);
    auto f3 = division_poly(E, 3);
    CHECK(f3.y_power == 0);
    CHECK(f3.coeffs.size() == 5);
    CHECK(division_poly(E, 4).y_power == 1);
    CHECK_THROWS_AS(division_poly(E, 0), DomainError);
    CHECK_THROWS_AS(division_poly(E, 201), Unsupported);

    // psi_m(P) = 0 exactly when mP = O, and both primitive tests agree
    for (u64 p : sieve_primes(60)) {
        if (p <= 3) continue;
        for (i64 a = 0; a < 7; ++a)
            for (i64 b = 0; b < 7; ++b) {
                auto C = make_curve(a, b, p);
                if (C.singular) continue;
                for (const auto& P : enumerate_points(C)) {
                    if (P.inf) continue;
                    for (u64 m = 1; m <= 20; ++m)
                        REQUIRE((division_value(C, m, P) == 0) == ec_mul(C, m, P).inf);
                    REQUIRE(primitive_point_test_division(C, P) == is_primitive_point(C, P));
                }
            }
    }
}

TEST_CASE("psi_3 roots are the 3-torsion abscissae") {
    for (u64 p : sieve_primes(50)) {
        if (p <= 3) continue;
        auto E = make_curve(1, 3, p);
        if (E.singular) continue;
        auto f = division_poly(E, 3);
        for (u64 x = 0; x < p; ++x) {
            u64 v = 0;
            for (size_t i = f.coeffs.size(); i-- > 0;) v = (mul_mod(v, x, p) + f.coeffs[i]) % p;
            bool torsion = false;
            for (const auto& P : enumerate_points(E))
                if (!P.inf && P.x == x && ec_mul(E, 3, P).inf) torsion = true;
            if (torsion) CHECK(v == 0);
            if (v == 0 && sqrt_mod((x * x % p * x + x + 3) % p, p)) CHECK(torsion);
        }
    }
}

TEST_CASE("Frobenius traces") {
    CHECK(frobenius_trace(0, 2, 7).ap == -1);
    CHECK(frobenius_trace(0, 2, 13).ap == -5);
    CHECK(frobenius_trace(0, 2, 19).ap == 7);
    CHECK(trace_prime_power(-1, 7, 2) == -6);
    CHECK(trace_coefficient(0, 2, 49) == -6);
    CHECK(trace_coefficient(0, 2, 91) == 5);
    CHECK(trace_coefficient(0, 2, 1) == 1);
    auto bad = frobenius_trace(0, 2, 3);
    CHECK(bad.bad);
    CHECK(std::abs(bad.ap) <= 1);
    CHECK(frobenius_trace(0, 2, 2).bad);
    for (u64 p : {5, 7, 11, 13, 101}) {
        i64 ap = frobenius_trace(3, 5, p).ap;
        CHECK(trace_prime_power(ap, p, 2) == ap * ap - static_cast<i64>(p));
        CHECK(trace_prime_power(ap, p, 3) == ap * ap * ap - 2 * static_cast<i64>(p) * ap);
    }
    auto ts = frobenius_traces(0, 2, 2000, 4);
    CHECK(ts.front().p == 3);
    for (const auto& t : ts)
        if (!t.bad) CHECK(t.ap == static_cast<i64>(t.p + 1 - curve_order(make_curve(0, 2, t.p))));
}

TEST_CASE("prime order census") {
    auto rows = prime_order_census(0, 2, 1000, 1);
    for (const auto& r : rows) {
        CHECK_FALSE(r.bad);
        CHECK(is_prime(r.n_over_d));
    }
    auto with_bad = prime_order_census(0, 2, 1000, 1, true);
    CHECK(with_bad.size() == rows.size() + 1);
    CHECK(with_bad.front().p == 3);
    CHECK(with_bad.front().bad);
    CHECK(rows.size() == 19);
    CHECK(rows[0].p == 13);
    CHECK(rows[0].n == 19);

    auto r4 = prime_order_census(-1, 0, 1000, 4);
    for (const auto& r : r4) CHECK(r.n == 4 * r.n_over_d);
    CHECK(r4.size() == 16);

    for (int t : {1, 3, 8}) {
        auto a = prime_order_census(0, 2, 20000, 1, true, t);
        auto b = prime_order_census_serial(0, 2, 20000, 1, true);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK((a[i].p == b[i].p && a[i].n == b[i].n && a[i].bad == b[i].bad));
    }
    long double s = 0;
    for (const auto& r : with_bad) s += 1.0L / r.p;
    CHECK(static_cast<double>(elliptic_brun(with_bad)) == doctest::Approx(static_cast<double>(s)));
    CHECK_THROWS_AS(prime_order_census(0, 2, 1000, 0), DomainError);
}

TEST_CASE("elliptic divisor") {
    CHECK(elliptic_divisor(0, 2, DivisorMode::Table) == 1);
    CHECK(elliptic_divisor(0, 2, DivisorMode::Empirical) == 1);
    CHECK(elliptic_divisor(2, 0, DivisorMode::Table) == 2);
    CHECK(elliptic_divisor(2, 0, DivisorMode::Empirical) == 2);
    CHECK(elliptic_divisor(-1, 0, DivisorMode::Table) == 8);
    CHECK(elliptic_divisor(-1, 0, DivisorMode::Empirical) == 8);
    CHECK(elliptic_divisor(0, 1, DivisorMode::Table) == 12);
    CHECK(elliptic_divisor(0, 1, DivisorMode::Empirical) == 12);
    CHECK(elliptic_divisor(0, 64, DivisorMode::Table) == 12);
    CHECK(elliptic_divisor(0, 8, DivisorMode::Table) == 4);
    CHECK(elliptic_divisor(0, 8, DivisorMode::Empirical) == 4);
    CHECK(elliptic_divisor(6, -2, DivisorMode::Empirical) == 1);
    CHECK_THROWS_AS(elliptic_divisor(6, -2, DivisorMode::Table), NotFound);
    CHECK(cm_discriminant(0, 5) == -3);
    CHECK(cm_discriminant(7, 0) == -4);
    CHECK_FALSE(cm_discriminant(6, -2));
    // 16 c^6 is 3-isogenous to the Fermat cubic: split primes all see full 3-torsion there
    CHECK(elliptic_divisor(0, 16, DivisorMode::Empirical) == 9);
    for (i64 b = 1; b < 40; ++b) {
        if (b == 16) continue;
        u64 d = elliptic_divisor(0, b, DivisorMode::Empirical);
        CHECK(24 % d == 0);
    }
}

TEST_CASE("Sato-Tate normalised traces") {
    auto cm = sato_tate_series(-1, 0, 10000);
    size_t zeros = 0;
    for (double z : cm) {
        CHECK(std::fabs(z) <= 1.0);
        zeros += z == 0.0;
    }
    CHECK(static_cast<double>(zeros) / cm.size() == doctest::Approx(0.5).epsilon(0.05));

    auto st = sato_tate_series(6, -2, 100000);
    std::vector<int> bins(20, 0);
    for (double z : st) {
        CHECK(std::fabs(z) <= 1.0);
        bins[std::min(19, static_cast<int>((z + 1) * 10))]++;
    }
    for (int c : bins) CHECK(c > 0);
}
