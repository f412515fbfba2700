#include "rootcensus/densities.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "rootcensus/errors.hpp"

namespace rc {

namespace {

// Sum over p > P of p^-s is at most 1.26 s P^(1-s) / ((s-1) log P), from pi(t) < 1.26 t / log t.
real prime_tail_sum(u64 P, int s) {
    real lp = std::log(static_cast<real>(P));
    return 1.26L * s * std::pow(static_cast<real>(P), 1 - s) / ((s - 1) * lp);
}

real product_tail(real value, real sum) { return std::fabs(value) * std::expm1(sum); }

}  // namespace

DensityResult euler_product(const ProductSpec& spec, u64 P) {
    if (P < 100) throw DomainError("euler_product: truncation below 100");
    if (spec.decay_exponent < 2) throw DomainError("euler_product: decay exponent below 2");
    real v = 1;
    for_each_prime(spec.prime_floor, P, [&](u64 p) {
        real f = spec.local_factor(p);
        if (!(f > 0)) throw DomainError(spec.name + ": nonpositive local factor at p=" + std::to_string(p));
        v *= f;
    });
    DensityResult r;
    r.value = v;
    r.truncation_prime = P;
    r.tail_bound = product_tail(v, spec.numerator * prime_tail_sum(P, spec.decay_exponent));
    return r;
}

namespace {

const std::map<std::string, Constant>& names() {
    static const std::map<std::string, Constant> m{
        {"artin", Constant::Artin},
        {"cyclic_c0", Constant::CyclicC0},
        {"primitive_point", Constant::PrimitivePoint},
        {"koblitz_p0", Constant::KoblitzP0},
        {"relative_order_c", Constant::RelativeOrderC},
        {"simultaneous_b", Constant::SimultaneousB},
        {"squarefree_totient_a0sq", Constant::SquarefreeTotientA0Sq},
    };
    return m;
}

real R(u64 p) { return static_cast<real>(p); }

}  // namespace

std::optional<Constant> constant_from_name(const std::string& name) {
    std::string low;
    for (char c : name) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto it = names().find(low);
    if (it == names().end()) return std::nullopt;
    return it->second;
}

std::string constant_name(Constant c) {
    for (auto& [k, v] : names())
        if (v == c) return k;
    return "?";
}

// Numerators are sup over p >= 2 of |1 - factor(p)| * p^s, rounded up.
ProductSpec constant_spec(Constant c) {
    switch (c) {
        case Constant::Artin:
            return {"artin", [](u64 p) { return 1 - 1 / (R(p) * (R(p) - 1)); }, 2, 2, 2};
        case Constant::CyclicC0:
            // 1/[K_p:Q] with [K_p:Q] = #GL2(F_p) = (p^2-1)(p^2-p)
            return {"cyclic_c0",
                    [](u64 p) { return 1 - 1 / ((R(p) * R(p) - 1) * (R(p) * R(p) - R(p))); }, 2, 4, 3};
        case Constant::PrimitivePoint:
            return {"primitive_point",
                    [](u64 p) {
                        real q = R(p);
                        return 1 - (q * q * q - q - 1) / (q * q * (q - 1) * (q - 1) * (q + 1));
                    },
                    2, 2, 2};
        case Constant::KoblitzP0:
            return {"koblitz_p0",
                    [](u64 p) {
                        real q = R(p);
                        return 1 - (q * q - q - 1) / ((q - 1) * (q - 1) * (q - 1) * (q + 1));
                    },
                    2, 2, 2};
        case Constant::RelativeOrderC:
            return {"relative_order_c", [](u64 p) { return 1 - R(p) / (R(p) * R(p) * R(p) - 1); }, 2, 2, 2};
        case Constant::SimultaneousB:
            return {"simultaneous_b",
                    [](u64 p) { return 1 - (2 * R(p) - 1) / (R(p) * R(p) * (R(p) - 1)); }, 2, 2, 3};
        case Constant::SquarefreeTotientA0Sq:
            break;
    }
    throw DomainError("no single product for " + constant_name(c));
}

DensityResult named_constant(Constant c, u64 P) {
    if (c == Constant::SquarefreeTotientA0Sq) {
        auto a = euler_product(constant_spec(Constant::Artin), P);
        DensityResult r = a;
        r.value = a.value * a.value;
        r.tail_bound = 2 * a.value * a.tail_bound + a.tail_bound * a.tail_bound;
        return r;
    }
    return euler_product(constant_spec(c), P);
}

PowerShape power_shape(u64 u) {
    if (u < 2) throw DomainError("power_shape: u < 2");
    PowerShape ps;
    // maximal k with u = b^k
    u64 b = u;
    for (unsigned k = 63; k >= 2; --k) {
        u64 r = iroot(u, k);
        u128 t = 1;
        for (unsigned i = 0; i < k; ++i) t *= r;
        if (r >= 2 && t == u) {
            ps.k = k;
            b = r;
            break;
        }
    }
    for (auto [p, e] : factorize(b).factors) {
        if (e % 2) ps.s *= p;
        for (unsigned i = 0; i < e / 2; ++i) ps.v *= p;
    }
    return ps;
}

DensityResult corrected_density(i64 u, u64 P) {
    if (u < 2) throw DomainError("corrected_density: need u >= 2 (negative u not covered)");
    if (is_square(static_cast<u64>(u))) throw DomainError("corrected_density: u is a perfect square");
    auto sh = power_shape(static_cast<u64>(u));
    const u64 k = sh.k;
    ProductSpec spec{"hooley",
                     [k](u64 p) { return k % p == 0 ? 1 - 1 / (R(p) - 1) : 1 - 1 / (R(p) * (R(p) - 1)); }, 2, 2,
                     2};
    auto r = euler_product(spec, P);
    if (sh.s % 4 == 1) {
        auto fs = factorize(sh.s);
        real prod = 1;
        for (u64 p : fs.primes()) prod *= k % p == 0 ? 1 / (R(p) - 2) : 1 / (R(p) * R(p) - R(p) - 1);
        real corr = 1 - mobius(fs) * prod;
        r.value *= corr;
        r.tail_bound *= std::fabs(corr);
    }
    return r;
}

DensityResult progression_density(i64 u, u64 q, u64 a, u64 k, u64 P) {
    if (q == 0 || std::gcd(a % q, q) != 1) throw DomainError("progression_density: need gcd(a, q) = 1");
    if (k == 0) throw DomainError("progression_density: k must be positive");
    if (u == 0 || u == 1 || u == -1) throw DomainError("progression_density: u must not be 0 or +-1");
    u64 am1 = (a % q + q - 1) % q;  // a - 1 mod q
    u64 g = std::gcd(am1, q);
    DensityResult r;
    r.truncation_prime = P;
    if (std::gcd(g, k) != 1) return r;  // A(q, a, k) = 0
    ProductSpec spec{"progression",
                     [q, k](u64 p) -> real {
                         if (q % p == 0) return 1;
                         return k % p == 0 ? 1 - 1 / (R(p) - 1) : 1 - 1 / (R(p) * (R(p) - 1));
                     },
                     2, 2, 2};
    r = euler_product(spec, P);
    real lead = 1;
    for (u64 p : factorize(g).primes()) lead *= 1 - 1 / R(p);
    real scale = lead / static_cast<real>(totient(q));
    r.value *= scale;
    r.tail_bound *= scale;
    return r;
}

namespace {

// Singular series only converge conditionally, so the integral tail bound does not apply.
// The reported bound is four times the larger of the last two dyadic drifts.
DensityResult series_product(const std::function<real(u64)>& factor, real lead, u64 P) {
    if (P < 100) throw DomainError("singular series truncation below 100");
    real v = lead, v2 = 0, v4 = 0;
    for_each_prime(2, P, [&](u64 p) {
        if (p > P / 4 && v4 == 0) v4 = v;
        if (p > P / 2 && v2 == 0) v2 = v;
        v *= factor(p);
    });
    DensityResult r;
    r.value = v;
    r.truncation_prime = P;
    r.tail_bound = 4 * std::max(std::fabs(v - v2), std::fabs(v2 - v4));
    return r;
}

}  // namespace

DensityResult singular_series(const Poly& f, u64 P) {
    if (f.degree() < 1) throw DomainError("singular_series: degree must be at least 1");
    if (fixed_divisor(f) != 1) {
        DensityResult r;
        r.truncation_prime = P;
        r.zero_density = true;
        return r;
    }
    return series_product(
        [&f](u64 p) { return (R(p) - static_cast<real>(root_count(f, p))) / (R(p) - 1); },
        1 / static_cast<real>(f.degree()), P);
}

DensityResult quadratic_series_legendre(u64 P) {
    return series_product([](u64 p) { return p == 2 ? 1 : 1 - jacobi(-1, p) / (R(p) - 1); }, 0.5L, P);
}

DensityResult koblitz_delta1(i64 D, u64 P) {
    i64 r4 = ((D % 4) + 4) % 4;
    if (D == 0 || (r4 != 0 && r4 != 1)) throw DomainError("koblitz_delta1: D must be 0 or 1 mod 4");
    auto r = named_constant(Constant::KoblitzP0, P);
    if (r4 == 1) {
        real prod = 1;
        for (u64 q : factorize(static_cast<u64>(D < 0 ? -D : D)).primes()) {
            real t = R(q);
            prod *= 1 / (t * t * t - 2 * t * t - t + 3);
        }
        r.value *= 1 + prod;
        r.tail_bound *= 1 + prod;
    }
    return r;
}

DensityResult cyclic_corrected(i64 D, u64 P) {
    if (D == 0) throw DomainError("cyclic_corrected: D = 0");
    auto r = named_constant(Constant::CyclicC0, P);
    if (D % 2 == 0) return r;
    real prod = 1;
    for (u64 p : factorize(2 * static_cast<u64>(D < 0 ? -D : D)).primes())
        prod *= -1 / ((R(p) * R(p) - 1) * (R(p) * R(p) - R(p)));
    r.value *= 1 + prod;
    r.tail_bound *= std::fabs(1 + prod);
    return r;
}

}  // namespace rc
