#pragma once

#include <vector>

#include "rootcensus/arith.hpp"

namespace rc {

inline constexpr u64 kSmoothCap = 100'000'000;

// #{n <= x : every prime factor of n is <= y}; n = 1 counts.
u64 psi_count(u64 x, u64 y, int threads = 0);
u64 psi_count_serial(u64 x, u64 y);

// #{n <= x : every prime factor p of n has y <= p <= z}; n = 1 counts.
u64 theta_count(u64 x, u64 y, u64 z, int threads = 0);
u64 theta_count_serial(u64 x, u64 y, u64 z);

struct RhoTable {
    long double h = 0;
    std::vector<long double> values;  // rho(i h), i = 0 .. umax / h

    long double umax() const { return h * static_cast<long double>(values.size() - 1); }
    long double operator()(long double u) const;  // linear interpolation between grid points
};

// Trapezoid rule on u rho(u) = int_{u-1}^{u} rho, the integrated delay equation; 1/h must be an integer.
RhoTable rho_table(long double h, long double umax);

// 0 < u <= 20, on the shared h = 1e-4 table.
long double dickman_rho(long double u);

}  // namespace rc
