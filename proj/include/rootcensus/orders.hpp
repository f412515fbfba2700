#pragma once

#include <vector>

#include "rootcensus/arith.hpp"

namespace rc {

struct OrderRecord {
    u64 p = 0;
    u64 u = 0;  // residue of the element
    u64 order = 0;

    double relative_order() const { return static_cast<double>(order) / static_cast<double>(p - 1); }
    u64 index() const { return (p - 1) / order; }  // relative order is always 1/index
};

// Order of u in a group of exponent dividing `exp`, whose factorization is given.
u64 order_dividing(u64 u, u64 n, const Factorization& exp);

u64 multiplicative_order(i128 u, u64 p);
u64 multiplicative_order(i128 u, u64 p, const Factorization& pm1);

// Order modulo any n >= 2 with gcd(u, n) = 1; driven by carmichael(n).
u64 order_mod(i128 u, u64 n);

bool is_primitive_root(i128 u, u64 p);
bool is_primitive_root(i128 u, u64 p, const Factorization& pm1);
u64 least_primitive_root(u64 p);
u64 least_primitive_root(u64 p, const Factorization& pm1);

bool is_primitive_dth_residue(i128 u, u64 p, u64 d);

double char_indicator_divisor(i64 u, u64 p);
double char_indicator_divisorfree(i64 u, u64 p);

struct ExpSumMax {
    double max_abs = 0;
    u64 a = 0;
};
ExpSumMax exp_sum_max(u64 p);

std::vector<OrderRecord> relative_order_series(i64 u, u64 x, int threads = 0);
std::vector<OrderRecord> relative_order_series_serial(i64 u, u64 x);

}  // namespace rc
