#pragma once

#include <optional>
#include <vector>

#include "rootcensus/arith.hpp"

namespace rc {

// y^2 = x^3 + a x + b over F_p.
struct Curve {
    i64 a = 0, b = 0;  // rational model
    u64 p = 0;
    u64 ap = 0, bp = 0;  // reduced mod p
    bool singular = false;

    i128 discriminant() const;  // -16 (4a^3 + 27b^2); capacity error if it leaves 127 bits
};

// p must be a prime > 3; singular reductions are accepted and flagged.
Curve make_curve(i64 a, i64 b, u64 p);

struct Point {
    u64 x = 0, y = 0;
    bool inf = true;

    static Point identity() { return {}; }
    static Point affine(u64 x, u64 y) { return {x, y, false}; }
    bool operator==(const Point&) const = default;
};

bool on_curve(const Curve& E, const Point& P);
Point ec_neg(const Curve& E, const Point& P);
Point ec_add(const Curve& E, const Point& P, const Point& Q);
Point ec_mul(const Curve& E, u64 k, const Point& P);

// Square root mod an odd prime; nullopt for non-residues.
std::optional<u64> sqrt_mod(u64 a, u64 p);

// Every point of E(F_p), identity first; for oracles and small p.
std::vector<Point> enumerate_points(const Curve& E);

u64 curve_order(const Curve& E);           // Legendre path for p <= 10^4, BSGS above
u64 curve_order_legendre(const Curve& E);  // p <= 10^7
u64 curve_order_bsgs(const Curve& E);      // p <= 10^12

// Nonsingular points of y^2 = x^3 + a x + b over F_p (identity included), any prime p.
u64 nonsingular_count(i64 a, i64 b, u64 p);

struct GroupStructure {
    u64 n = 0, d = 1, e = 0;  // E(F_p) = Z/d x Z/e, d | e
};

GroupStructure group_structure(const Curve& E);
GroupStructure group_structure_enumerate(const Curve& E);

struct CyclicityReport {
    bool cyclic = false;
    bool gcd_criterion = false;  // gcd(n, p-1) = 1, sufficient only
};
CyclicityReport cyclicity(const Curve& E);
bool is_cyclic(const Curve& E);

u64 point_order(const Curve& E, const Point& P);
u64 point_order(const Curve& E, const Point& P, const Factorization& n);
bool is_primitive_point(const Curve& E, const Point& P);

// psi_m = y^y_power * f(x); for odd m y_power = 0, for even m y_power = 1.
struct DivisionPoly {
    unsigned y_power = 0;
    std::vector<u64> coeffs;  // f over F_p, constant first
};
inline constexpr u64 kDivisionLimit = 200;

DivisionPoly division_poly(const Curve& E, u64 m);
// psi_m(P) mod p from the value recurrence; P affine.
u64 division_value(const Curve& E, u64 m, const Point& P);
bool primitive_point_test_division(const Curve& E, const Point& P);

struct Trace {
    u64 p = 0;
    i64 ap = 0;
    bool bad = false;
};

// a_p for primes 3 <= p <= x; bad reductions flagged with a_p = p - #nonsingular.
std::vector<Trace> frobenius_traces(i64 a, i64 b, u64 x, int threads = 0);
Trace frobenius_trace(i64 a, i64 b, u64 p);
// a_{p^k} from the recurrence a_{p^(k+1)} = a_p a_{p^k} - p a_{p^(k-1)}; bad p gives a_p^k.
i64 trace_prime_power(i64 ap, u64 p, unsigned k, bool bad = false);
i64 trace_coefficient(i64 a, i64 b, u64 n);

struct CensusRow {
    u64 p = 0, n = 0, n_over_d = 0;
    bool bad = false;
};

std::vector<CensusRow> prime_order_census(i64 a, i64 b, u64 x, u64 d, bool include_bad = false, int threads = 0);
std::vector<CensusRow> prime_order_census_serial(i64 a, i64 b, u64 x, u64 d, bool include_bad = false);
long double elliptic_brun(const std::vector<CensusRow>& rows);

enum class DivisorMode { Table, Empirical };
u64 elliptic_divisor(i64 a, i64 b, DivisorMode mode);
// CM discriminant when j(E) is one of the thirteen rational CM invariants.
std::optional<i64> cm_discriminant(i64 a, i64 b);

std::vector<double> sato_tate_series(i64 a, i64 b, u64 x, int threads = 0);

}  // namespace rc
