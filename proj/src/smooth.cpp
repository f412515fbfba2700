#include "rootcensus/smooth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "rootcensus/errors.hpp"
#include "rootcensus/parallel.hpp"

namespace rc {

namespace {

constexpr u64 kBlock = 1 << 18;

// Count n in [lo, hi) whose prime factors all lie in `primes`.
u64 count_block(u64 lo, u64 hi, const std::vector<u64>& primes, std::vector<uint32_t>& rem) {
    const u64 len = hi - lo;
    rem.resize(len);
    for (u64 i = 0; i < len; ++i) rem[i] = static_cast<uint32_t>(lo + i);
    for (u64 q : primes) {
        if (q >= hi) break;
        for (u64 qk = q; qk < hi; qk *= q) {
            for (u64 m = (lo + qk - 1) / qk * qk; m < hi; m += qk) rem[m - lo] /= static_cast<uint32_t>(q);
            if (qk > hi / q) break;
        }
    }
    return static_cast<u64>(std::count(rem.begin(), rem.begin() + static_cast<long>(len), 1u));
}

std::vector<u64> primes_between(u64 y, u64 z) {
    std::vector<u64> out;
    for (u64 p : sieve_primes(z))
        if (p >= y) out.push_back(p);
    return out;
}

u64 count_range(u64 x, const std::vector<u64>& primes, int threads) {
    const long blocks = static_cast<long>(x / kBlock + 1);
    u64 total = 0;
#pragma omp parallel num_threads(resolve_threads(threads))
    {
        std::vector<uint32_t> rem;
#pragma omp for schedule(dynamic) reduction(+ : total)
        for (long b = 0; b < blocks; ++b) {
            u64 lo = std::max<u64>(1, static_cast<u64>(b) * kBlock), hi = std::min(x + 1, (static_cast<u64>(b) + 1) * kBlock);
            if (lo < hi) total += count_block(lo, hi, primes, rem);
        }
    }
    return total;
}

u64 count_range_serial(u64 x, const std::vector<u64>& primes) {
    std::vector<uint32_t> rem;
    u64 total = 0;
    for (u64 lo = 1; lo <= x; lo += kBlock) total += count_block(lo, std::min(x + 1, lo + kBlock), primes, rem);
    return total;
}

void check_x(u64 x) {
    if (x > kSmoothCap) throw CapacityError("smooth counts: x above 10^8");
}

void check_theta(u64 x, u64 y, u64 z) {
    check_x(x);
    if (y < 2) throw DomainError("theta_count: y must be at least 2");
    if (y > z) throw DomainError("theta_count: y > z");
}

}  // namespace

u64 psi_count(u64 x, u64 y, int threads) {
    check_x(x);
    if (y < 2) throw DomainError("psi_count: y must be at least 2");
    if (y >= x) return x;
    return count_range(x, sieve_primes(y), threads);
}

u64 psi_count_serial(u64 x, u64 y) {
    check_x(x);
    if (y < 2) throw DomainError("psi_count: y must be at least 2");
    if (y >= x) return x;
    return count_range_serial(x, sieve_primes(y));
}

u64 theta_count(u64 x, u64 y, u64 z, int threads) {
    check_theta(x, y, z);
    return count_range(x, primes_between(y, std::min(z, x)), threads);
}

u64 theta_count_serial(u64 x, u64 y, u64 z) {
    check_theta(x, y, z);
    return count_range_serial(x, primes_between(y, std::min(z, x)));
}

long double RhoTable::operator()(long double u) const {
    if (!(u > 0)) throw DomainError("rho: u must be positive");
    if (u <= 1) return 1;
    if (u > umax() + h / 2) throw CapacityError("rho: u beyond the table");
    long double t = u / h;
    auto i = static_cast<size_t>(std::floor(t));
    if (i + 1 >= values.size()) return values.back();
    long double f = t - static_cast<long double>(i);
    return values[i] + f * (values[i + 1] - values[i]);
}

RhoTable rho_table(long double h, long double umax) {
    const long double per = 1 / h;
    const auto steps_per_unit = static_cast<size_t>(std::llround(per));
    if (steps_per_unit == 0 || std::fabs(per - static_cast<long double>(steps_per_unit)) > 1e-6L)
        throw DomainError("rho_table: 1/h must be an integer");
    const auto n = static_cast<size_t>(std::llround(umax * per));
    RhoTable T;
    T.h = h;
    T.values.assign(n + 1, 1);
    // Trapezoid on u rho(u) = integral of rho over [u-1, u]; every term is positive, so the
    // table cannot cross zero. The window sum is rebuilt once per unit to shed rounding drift.
    const size_t N = steps_per_unit;
    long double window = 0;  // rho_{i-N+1} + ... + rho_{i-1}
    for (size_t i = N + 1; i <= n; ++i) {
        if ((i - N - 1) % N == 0) {
            window = 0;
            for (size_t j = i - N + 1; j < i; ++j) window += T.values[j];
        } else {
            window += T.values[i - 1] - T.values[i - N];
        }
        long double u = static_cast<long double>(i) * h;
        T.values[i] = h * (T.values[i - N] / 2 + window) / (u - h / 2);
    }
    return T;
}

long double dickman_rho(long double u) {
    if (!(u > 0)) throw DomainError("dickman_rho: u must be positive");
    if (u > 20) throw CapacityError("dickman_rho: u above 20");
    static const RhoTable table = rho_table(1e-4L, 20);
    return table(u);
}

}  // namespace rc
