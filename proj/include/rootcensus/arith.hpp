#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace rc {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

// Reduce any signed value into [0, m).
inline u64 reduce(i128 a, u64 m) {
    i128 r = a % static_cast<i128>(m);
    return static_cast<u64>(r < 0 ? r + m : r);
}

u64 mod_pow(i128 base, u64 exp, u64 modulus);

// Largest r with r^k <= x.
u64 iroot(u64 x, unsigned k);
inline u64 isqrt(u64 x) { return iroot(x, 2); }
bool is_square(u64 x);

// Sieve limit accepted by sieve_primes; beyond it the list would not fit.
inline constexpr u64 kSieveCap = 1'000'000'000ULL;

std::vector<u64> sieve_primes(u64 limit);
u64 prime_pi(u64 limit);

// Primes in [lo, hi] using base primes up to sqrt(hi); base must cover sqrt(hi).
void sieve_segment(u64 lo, u64 hi, const std::vector<u64>& base, std::vector<u64>& out);

// Calls fn(p) for every prime in [lo, hi] in ascending order, segment by segment.
void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn);

bool is_prime(u64 n);

struct Factorization {
    u64 value = 1;
    std::vector<std::pair<u64, unsigned>> factors;

    u64 product() const;
    std::vector<u64> primes() const;
    std::vector<u64> divisors() const;  // ascending
};

Factorization factorize(u64 n);

int jacobi(i128 a, u64 n);

u64 totient(u64 n);
int mobius(u64 n);
u64 carmichael(u64 n);

u64 totient(const Factorization& f);
int mobius(const Factorization& f);
u64 carmichael(const Factorization& f);

}  // namespace rc
