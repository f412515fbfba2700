#include "rootcensus/expansions.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "rootcensus/errors.hpp"
#include "rootcensus/orders.hpp"

namespace rc {

namespace {

constexpr u64 kMaxDigits = 100'000'000;

void check_coprime(u64 n, u64 base) {
    if (n < 2) throw DomainError("modulus must be at least 2");
    if (base < 2) throw DomainError("base must be at least 2");
    if (std::gcd(n, base) != 1) throw DomainError("modulus and base must be coprime");
}

void check_3mod4(u64 p) {
    if (p < 7 || p % 4 != 3 || !is_prime(p)) throw DomainError("need a prime p = 3 mod 4, p >= 7");
}

}  // namespace

u64 expansion_period(u64 n, u64 base) {
    check_coprime(n, base);
    return order_mod(base, n);
}

std::vector<u64> expansion_digits(u64 num, u64 n, u64 base, u64 count) {
    if (n == 0 || base < 2) throw DomainError("expansion_digits: bad modulus or base");
    if (count > kMaxDigits) throw CapacityError("expansion_digits: too many digits");
    std::vector<u64> d;
    d.reserve(count);
    u128 r = num % n;
    for (u64 i = 0; i < count; ++i) {
        r *= base;
        d.push_back(static_cast<u64>(r / n));
        r %= n;
    }
    return d;
}

ExpansionRecord repeating_block(u64 n, u64 base) {
    ExpansionRecord e{n, base, expansion_period(n, base), {}};
    e.digits = expansion_digits(1, n, base, e.period);
    return e;
}

std::string digit_string(const std::vector<u64>& digits, u64 base) {
    std::string s;
    for (u64 x : digits) {
        if (base <= 36) {
            s += static_cast<char>(x < 10 ? '0' + x : 'a' + (x - 10));
        } else {
            if (!s.empty()) s += '.';
            s += std::to_string(x);
        }
    }
    return s;
}

bool is_wieferich(u64 p, u64 base) {
    if (p < 2 || !is_prime(p)) throw DomainError("is_wieferich: p must be prime");
    if (base % p == 0) throw DomainError("is_wieferich: p divides the base");
    if (p > 0xFFFFFFFFULL) throw CapacityError("is_wieferich: p^2 exceeds 64 bits");
    return mod_pow(base, p - 1, p * p) == 1;
}

u64 class_number_imag(u64 p) {
    if (p % 4 != 3 || p < 7) throw DomainError("class_number_imag: need p = 3 mod 4, p >= 7");
    u64 h = 0;
    for (i64 a = 1; 3 * static_cast<u64>(a) * static_cast<u64>(a) <= p; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            if ((b & 1) == 0) continue;  // b = p mod 2
            u64 num = static_cast<u64>(b * b) + p;
            if (num % (4 * static_cast<u64>(a))) continue;
            i64 c = static_cast<i64>(num / (4 * static_cast<u64>(a)));
            if (c < a || (c == a && b < 0)) continue;
            ++h;
        }
    }
    return h;
}

ContinuedFraction sqrt_continued_fraction(u64 N) {
    if (N == 0 || is_square(N)) throw DomainError("sqrt_continued_fraction: N is a perfect square");
    if (N > (u64{1} << 62)) throw CapacityError("sqrt_continued_fraction: N above 2^62");
    ContinuedFraction cf;
    cf.a0 = isqrt(N);
    u64 m = cf.a0, d = N - cf.a0 * cf.a0;
    const u64 m1 = m, d1 = d;
    for (;;) {
        u64 a = (cf.a0 + m) / d;
        cf.period.push_back(a);
        m = d * a - m;
        d = (N - m * m) / d;
        if (m == m1 && d == d1) break;
    }
    return cf;
}

FundamentalUnit fundamental_unit(u64 d) {
    if (d < 2 || mobius(d) == 0) throw DomainError("fundamental_unit: d must be squarefree and > 1");
    auto cf = sqrt_continued_fraction(d);
    const size_t L = cf.period.size();
    u128 hp = 1, h = cf.a0, kp = 0, k = 1;
    for (size_t i = 0; i + 1 < L; ++i) {
        u128 a = cf.period[i], hn, kn;
        if (__builtin_mul_overflow(a, h, &hn) || __builtin_add_overflow(hn, hp, &hn) ||
            __builtin_mul_overflow(a, k, &kn) || __builtin_add_overflow(kn, kp, &kn))
            throw CapacityError("fundamental_unit: unit exceeds 128 bits");
        hp = h;
        h = hn;
        kp = k;
        k = kn;
    }
    return {h, k, L % 2 == 0 ? 1 : -1};
}

long double real_class_number(u64 p) {
    check_3mod4(p);
    auto cf = sqrt_continued_fraction(p);
    long double hp = 1, h = cf.a0, kp = 0, k = 1;
    for (size_t i = 0; i + 1 < cf.period.size(); ++i) {
        long double a = cf.period[i];
        long double hn = a * h + hp, kn = a * k + kp;
        hp = h;
        h = hn;
        kp = k;
        k = kn;
    }
    long double log_eps = std::log(h + k * std::sqrt(static_cast<long double>(p)));
    const u64 D = 4 * p;
    long double s = 0;
    for (u64 a = 1; a < D; a += 2) s += jacobi(static_cast<i64>(p), a) * std::log(std::sin(std::numbers::pi_v<long double> * a / D));
    return -s / (2 * log_eps);
}

IdentityCheck girstmair_check(u64 p, u64 base) {
    check_3mod4(p);
    if (base % p == 0 || !is_primitive_root(base, p)) throw DomainError("girstmair_check: base is not a primitive root mod p");
    auto d = expansion_digits(1, p, base, p - 1);
    i64 alt = 0;
    for (u64 n = 1; n <= p - 1; ++n) alt += (n % 2 ? -1 : 1) * static_cast<i64>(d[n - 1]);
    IdentityCheck c;
    c.value = alt;
    c.expected = static_cast<i64>(base + 1) * static_cast<i64>(class_number_imag(p));
    c.holds = c.value == c.expected;
    return c;
}

IdentityCheck hirzebruch_check(u64 p) {
    check_3mod4(p);
    auto cf = sqrt_continued_fraction(p);
    if (cf.period.size() % 2) throw InternalError("odd continued-fraction period for p = 3 mod 4");
    i64 alt = 0;
    for (size_t n = 1; n <= cf.period.size(); ++n) alt += (n % 2 ? 1 : -1) * static_cast<i64>(cf.period[n - 1]);
    IdentityCheck c;
    c.value = alt;
    c.expected = 3 * static_cast<i64>(class_number_imag(p));
    c.applicable = std::fabs(real_class_number(p) - 1) < 0.01L;
    c.holds = c.applicable && (alt < 0 ? -alt : alt) == c.expected;
    return c;
}

BlockDigitSum block_digit_sum(u64 p, u64 base, u64 r) {
    if (p < 3 || !is_prime(p)) throw DomainError("block_digit_sum: p must be an odd prime");
    if (r == 0 || (p - 1) % r) throw DomainError("block_digit_sum: r must divide p-1");
    if (base % p == 0 || multiplicative_order(base, p) != (p - 1) / r)
        throw DomainError("block_digit_sum: ord_p(base) != (p-1)/r");
    BlockDigitSum out;
    for (u64 x : expansion_digits(1, p, base, (p - 1) / r)) out.sum += x;

    // chi_j(g^k) = exp(2 pi i j k / (p-1)); odd iff j odd. The block sums the residues in <base>,
    // which picks out every character trivial there: order dividing r, i.e. j a multiple of (p-1)/r.
    const u64 n = p - 1, g = least_primitive_root(p);
    std::vector<u64> dlog(p);
    for (u64 k = 0, v = 1; k < n; ++k, v = v * g % p) dlog[v] = k;
    std::complex<long double> B = 0;
    for (u64 j = 1; j < n; ++j) {
        if (j % (n / r) != 0 || j % 2 == 0) continue;
        std::complex<long double> s = 0;
        for (u64 a = 1; a < p; ++a) {
            long double ang = 2 * std::numbers::pi_v<long double> * static_cast<long double>(j * dlog[a] % n) / n;
            s += static_cast<long double>(a) * std::polar(1.0L, ang);
        }
        B += s / static_cast<long double>(p);
    }
    out.bernoulli_term = B.real();
    const long double l1 = static_cast<long double>(base - 1);
    out.predicted = l1 / 2 * static_cast<long double>(n / r) + l1 / static_cast<long double>(r) * out.bernoulli_term;
    out.residual = std::fabs(out.predicted - static_cast<long double>(out.sum));
    return out;
}

}  // namespace rc
