#include "rootcensus/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "rootcensus/errors.hpp"

namespace rc {

u64 mod_pow(i128 base, u64 exp, u64 modulus) {
    if (modulus == 1) return 0;
    u64 b = reduce(base, modulus);
    u64 r = 1;
    while (exp) {
        if (exp & 1) r = mul_mod(r, b, modulus);
        b = mul_mod(b, b, modulus);
        exp >>= 1;
    }
    return r;
}

u64 iroot(u64 x, unsigned k) {
    if (k == 0) throw DomainError("iroot: k = 0");
    if (x < 2 || k == 1) return x;
    auto pow_le = [&](u64 r) {  // r^k <= x without overflow
        u128 acc = 1;
        for (unsigned i = 0; i < k; ++i) {
            acc *= r;
            if (acc > x) return false;
        }
        return true;
    };
    u64 r = static_cast<u64>(std::pow(static_cast<long double>(x), 1.0L / k));
    while (r > 0 && !pow_le(r)) --r;
    while (pow_le(r + 1)) ++r;
    return r;
}

bool is_square(u64 x) {
    u64 r = isqrt(x);
    return r * r == x;
}

namespace {

std::vector<u64> small_primes(u64 n) {
    std::vector<u64> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (u64 i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

constexpr u64 kSegment = u64{1} << 19;  // odd numbers per segment

// Sieves odd numbers of [lo, hi] (lo odd) in one block; calls fn on each prime.
template <class F>
void sieve_odd_block(u64 lo, u64 hi, const std::vector<u64>& base, std::vector<char>& buf, F&& fn) {
    u64 count = (hi - lo) / 2 + 1;
    buf.assign(count, 1);
    for (u64 q : base) {
        if (q == 2) continue;
        if (static_cast<u128>(q) * q > hi) break;
        u64 start = std::max(q * q, (lo + q - 1) / q * q);
        if ((start & 1) == 0) start += q;
        for (u64 m = start; m <= hi; m += 2 * q) buf[(m - lo) / 2] = 0;
    }
    for (u64 i = 0; i < count; ++i)
        if (buf[i]) {
            u64 v = lo + 2 * i;
            if (v > 1) fn(v);
        }
}

template <class F>
void sieve_range(u64 lo, u64 hi, const std::vector<u64>& base, F&& fn) {
    if (hi < 2 || lo > hi) return;
    if (lo <= 2) fn(u64{2});
    u64 s = std::max<u64>(lo, 3);
    if ((s & 1) == 0) ++s;
    std::vector<char> buf;
    while (s <= hi) {
        u64 e = (hi - s) / 2 < kSegment ? hi : s + 2 * (kSegment - 1);
        sieve_odd_block(s, e, base, buf, fn);
        if (e >= hi - 1) break;
        s = e + 2;
    }
}

}  // namespace

void sieve_segment(u64 lo, u64 hi, const std::vector<u64>& base, std::vector<u64>& out) {
    sieve_range(lo, hi, base, [&](u64 p) { out.push_back(p); });
}

std::vector<u64> sieve_primes(u64 limit) {
    if (limit < 2) return {};
    if (limit > kSieveCap) throw CapacityError("sieve_primes: limit above 10^9");
    auto base = small_primes(isqrt(limit));
    std::vector<u64> out;
    if (limit > 100) out.reserve(static_cast<size_t>(1.1 * limit / std::log(static_cast<double>(limit))) + 16);
    sieve_segment(2, limit, base, out);
    return out;
}

u64 prime_pi(u64 limit) {
    u64 n = 0;
    for_each_prime(2, limit, [&](u64) { ++n; });
    return n;
}

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn) {
    if (hi < 2 || lo > hi) return;
    auto base = small_primes(isqrt(hi));
    sieve_range(lo, hi, base, fn);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    if (n < 41 * 41) return true;
    u64 d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        u64 x = mod_pow(a % n, d, n);
        if (a % n == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

const std::vector<u64>& trial_primes() {
    static const std::vector<u64> t = small_primes(1 << 16);
    return t;
}

// Brent's variant with batched gcds; seed fixes the start point and the constant.
u64 rho(u64 n, u64 seed) {
    if (n % 2 == 0) return 2;
    u64 c = seed % (n - 1) + 1;
    u64 y = (seed * 0x9E3779B97F4A7C15ULL) % n;
    auto f = [&](u64 v) { return static_cast<u64>((static_cast<u128>(v) * v + c) % n); };
    u64 g = 1, r = 1, q = 1, x = y, ys = y;
    const u64 m = 128;
    do {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        u64 k = 0;
        do {
            ys = y;
            for (u64 i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = mul_mod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += m;
        } while (k < r && g == 1);
        r <<= 1;
    } while (g == 1);
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void split(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 r = isqrt(n);
    if (r * r == n) {
        split(r, out);
        split(r, out);
        return;
    }
    u64 d = n;
    for (u64 seed = n; d == n || d == 1; ++seed) d = rho(n, seed);
    split(d, out);
    split(n / d, out);
}

}  // namespace

Factorization factorize(u64 n) {
    if (n == 0) throw DomainError("factorize: n = 0");
    Factorization f;
    f.value = n;
    u64 m = n;
    for (u64 q : trial_primes()) {
        if (q * q > m) break;
        if (m % q) continue;
        unsigned e = 0;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        f.factors.emplace_back(q, e);
    }
    if (m > 1) {
        std::vector<u64> ps;
        split(m, ps);
        std::sort(ps.begin(), ps.end());
        for (u64 p : ps) {
            if (!f.factors.empty() && f.factors.back().first == p)
                ++f.factors.back().second;
            else
                f.factors.emplace_back(p, 1);
        }
    }
    return f;
}

u64 Factorization::product() const {
    u64 r = 1;
    for (auto [p, e] : factors)
        for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
}

std::vector<u64> Factorization::primes() const {
    std::vector<u64> r;
    for (auto [p, e] : factors) r.push_back(p);
    return r;
}

std::vector<u64> Factorization::divisors() const {
    std::vector<u64> d{1};
    for (auto [p, e] : factors) {
        size_t n = d.size();
        u64 pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (size_t j = 0; j < n; ++j) d.push_back(d[j] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

int jacobi(i128 a, u64 n) {
    if (n == 0 || n % 2 == 0) throw DomainError("jacobi: modulus must be odd and positive");
    u64 x = reduce(a, n), m = n;
    int t = 1;
    while (x) {
        while (x % 2 == 0) {
            x /= 2;
            if (m % 8 == 3 || m % 8 == 5) t = -t;
        }
        std::swap(x, m);
        if (x % 4 == 3 && m % 4 == 3) t = -t;
        x %= m;
    }
    return m == 1 ? t : 0;
}

u64 totient(const Factorization& f) {
    u64 r = f.value;
    for (auto [p, e] : f.factors) r = r / p * (p - 1);
    return r;
}

int mobius(const Factorization& f) {
    for (auto [p, e] : f.factors)
        if (e > 1) return 0;
    return f.factors.size() % 2 ? -1 : 1;
}

u64 carmichael(const Factorization& f) {
    u64 l = 1;
    for (auto [p, e] : f.factors) {
        u64 pe1 = 1;
        for (unsigned i = 1; i < e; ++i) pe1 *= p;
        u64 v = pe1 * (p - 1);
        if (p == 2 && e >= 3) v /= 2;
        l = std::lcm(l, v);
    }
    return l;
}

u64 totient(u64 n) { return totient(factorize(n)); }
int mobius(u64 n) { return mobius(factorize(n)); }
u64 carmichael(u64 n) { return carmichael(factorize(n)); }

}  // namespace rc
