#include "rootcensus/orders.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "rootcensus/errors.hpp"
#include "rootcensus/parallel.hpp"

namespace rc {

namespace {

void check_unit(i128 u, u64 p) {
    if (p < 2) throw DomainError("modulus must be a prime");
    if (reduce(u, p) == 0) throw DomainError("element is divisible by the modulus");
}

// Rounds v to 0 or 1, insisting it was already within 1e-6 of one of them.
double round_indicator(std::complex<double> v, u64 p) {
    if (std::abs(v.imag()) >= 1e-6 || std::min(std::abs(v.real()), std::abs(v.real() - 1)) > 1e-6)
        throw InternalError("character-sum indicator drifted from {0,1} at p=" + std::to_string(p));
    return std::round(v.real());
}

}  // namespace

u64 order_dividing(u64 u, u64 n, const Factorization& exp) {
    u64 k = exp.value;
    for (auto [q, e] : exp.factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (mod_pow(u, k / q, n) != 1) break;
            k /= q;
        }
    }
    return k;
}

u64 multiplicative_order(i128 u, u64 p, const Factorization& pm1) {
    check_unit(u, p);
    if (p == 2) return 1;
    return order_dividing(reduce(u, p), p, pm1);
}

u64 multiplicative_order(i128 u, u64 p) { return multiplicative_order(u, p, factorize(p - 1)); }

u64 order_mod(i128 u, u64 n) {
    if (n < 2) throw DomainError("order_mod: modulus < 2");
    u64 r = reduce(u, n);
    if (std::gcd(r, n) != 1) throw DomainError("order_mod: element not coprime to modulus");
    if (n == 2) return 1;
    return order_dividing(r, n, factorize(carmichael(n)));
}

bool is_primitive_root(i128 u, u64 p, const Factorization& pm1) {
    check_unit(u, p);
    u64 r = reduce(u, p);
    for (auto [q, e] : pm1.factors)
        if (mod_pow(r, (p - 1) / q, p) == 1) return false;
    return true;
}

bool is_primitive_root(i128 u, u64 p) {
    if (p == 2) {
        check_unit(u, p);
        return true;
    }
    return is_primitive_root(u, p, factorize(p - 1));
}

u64 least_primitive_root(u64 p, const Factorization& pm1) {
    if (p == 2) return 1;
    for (u64 g = 2;; ++g)
        if (is_primitive_root(g, p, pm1)) return g;
}

u64 least_primitive_root(u64 p) { return p == 2 ? 1 : least_primitive_root(p, factorize(p - 1)); }

bool is_primitive_dth_residue(i128 u, u64 p, u64 d) {
    if (d == 0 || (p - 1) % d) throw DomainError("d must divide p-1");
    return multiplicative_order(u, p) == (p - 1) / d;
}

double char_indicator_divisor(i64 u, u64 p) {
    check_unit(u, p);
    if (p > 10000) throw DomainError("char_indicator_divisor: p above 10^4");
    if (p == 2) return 1;
    u64 g = least_primitive_root(p);
    // discrete log of u
    u64 target = reduce(u, p), k = 0;
    for (u64 v = 1; v != target; v = v * g % p) ++k;
    u64 n = p - 1;
    auto fn = factorize(n);
    std::complex<double> total = 0;
    for (u64 d : fn.divisors()) {
        auto fd = factorize(d);
        int mu = mobius(fd);
        if (mu == 0) continue;
        std::complex<double> inner = 0;
        for (u64 j = 1; j <= d; ++j) {
            if (std::gcd(j, d) != 1) continue;
            double ang = 2 * std::numbers::pi * static_cast<double>(j * k % d) / static_cast<double>(d);
            inner += std::polar(1.0, ang);
        }
        total += static_cast<double>(mu) / static_cast<double>(totient(fd)) * inner;
    }
    total *= static_cast<double>(totient(fn)) / static_cast<double>(n);
    return round_indicator(total, p);
}

double char_indicator_divisorfree(i64 u, u64 p) {
    check_unit(u, p);
    if (p > 2000) throw DomainError("char_indicator_divisorfree: p above 2000");
    if (p == 2) return 1;
    u64 tau = least_primitive_root(p);
    u64 target = reduce(u, p);
    std::vector<std::complex<double>> e(p);
    for (u64 j = 0; j < p; ++j) e[j] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p));
    std::complex<double> total = 0;
    u64 t = 1;
    for (u64 n = 1; n < p; ++n) {
        t = t * tau % p;
        if (std::gcd(n, p - 1) != 1) continue;
        u64 diff = (t + p - target) % p;
        std::complex<double> inner = 0;
        for (u64 k = 0; k < p; ++k) inner += e[diff * k % p];
        total += inner / static_cast<double>(p);
    }
    return round_indicator(total, p);
}

ExpSumMax exp_sum_max(u64 p) {
    if (p < 3 || p > 5000 || !is_prime(p)) throw DomainError("exp_sum_max: need prime 3 <= p <= 5000");
    u64 tau = least_primitive_root(p);
    std::vector<u64> roots;
    u64 t = 1;
    for (u64 n = 1; n < p; ++n) {
        t = t * tau % p;
        if (std::gcd(n, p - 1) == 1) roots.push_back(t);
    }
    std::vector<double> c(p), s(p);
    for (u64 j = 0; j < p; ++j) {
        double ang = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p);
        c[j] = std::cos(ang);
        s[j] = std::sin(ang);
    }
    ExpSumMax best;
    for (u64 a = 1; a < p; ++a) {
        if (std::gcd(a, p - 1) != 1) continue;
        double re = 0, im = 0;
        for (u64 r : roots) {
            u64 j = a * r % p;
            re += c[j];
            im += s[j];
        }
        double v = std::hypot(re, im);
        if (v > best.max_abs) best = {v, a};
    }
    return best;
}

namespace {

OrderRecord order_record(i64 u, u64 p) {
    OrderRecord r;
    r.p = p;
    r.u = reduce(u, p);
    r.order = multiplicative_order(u, p);
    return r;
}

std::vector<u64> primes_not_dividing(i64 u, u64 x) {
    std::vector<u64> ps;
    for (u64 p : sieve_primes(x))
        if (reduce(u, p) != 0) ps.push_back(p);
    return ps;
}

}  // namespace

std::vector<OrderRecord> relative_order_series_serial(i64 u, u64 x) {
    if (u == 0) throw DomainError("relative_order_series: u = 0");
    std::vector<OrderRecord> out;
    for (u64 p : primes_not_dividing(u, x)) out.push_back(order_record(u, p));
    return out;
}

std::vector<OrderRecord> relative_order_series(i64 u, u64 x, int threads) {
    if (u == 0) throw DomainError("relative_order_series: u = 0");
    auto ps = primes_not_dividing(u, x);
    std::vector<OrderRecord> out(ps.size());
    const long n = static_cast<long>(ps.size());
#pragma omp parallel for schedule(dynamic, 1024) num_threads(resolve_threads(threads))
    for (long i = 0; i < n; ++i) out[i] = order_record(u, ps[i]);
    return out;
}

}  // namespace rc
