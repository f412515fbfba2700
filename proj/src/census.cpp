#include "rootcensus/census.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>
#include <cmath>
#include <numeric>

#include "rootcensus/orders.hpp"
#include "rootcensus/parallel.hpp"

namespace rc {

namespace {

double c_estimate(u64 hits, u64 x, int m) {
    long double y = m == 1 ? static_cast<long double>(x) : std::pow(static_cast<long double>(x), 1.0L / m);
    return static_cast<double>(hits * std::log(y) / y);
}

CensusRecord make_record(u64 x, u64 baseline, u64 hits, int m) {
    CensusRecord r{x, baseline, hits, 0, 0};
    r.ratio = baseline ? static_cast<double>(hits) / static_cast<double>(baseline) : 0.0;
    r.c_estimate = x > 1 ? c_estimate(hits, x, m) : 0.0;
    return r;
}

std::vector<u64> checkpoints(u64 x) {
    std::vector<u64> out;
    for (u64 X = 10; X <= x; X *= 10) {
        out.push_back(X);
        if (X > UINT64_MAX / 10) break;
    }
    if (out.empty() || out.back() != x) out.push_back(x);
    return out;
}

bool is_hit(u64 p, i64 u, Criterion c) {
    if (reduce(u, p) == 0) return false;
    if (p == 2) return c == Criterion::PrimitiveRoot;  // least primitive root of 2 is 1
    auto f = factorize(p - 1);
    if (!is_primitive_root(u, p, f)) return false;
    if (c == Criterion::LeastPrimitiveRoot) return u > 0 && least_primitive_root(p, f) == static_cast<u64>(u);
    return true;
}

u64 value_at(const Poly& f, u64 n) {
    i128 v = f.eval(static_cast<i128>(n));
    if (v > static_cast<i128>(UINT64_MAX)) throw CapacityError("polynomial value exceeds 64 bits");
    return v < 0 ? 0 : static_cast<u64>(v);
}

void check_poly_census(const Poly& f, i64 u) {
    if (f.degree() < 1) throw DomainError("census polynomial must have degree >= 1");
    if (u == 0 || u == 1 || u == -1) throw DomainError("u must not be 0 or +-1");
    if (fixed_divisor(f) != 1) throw DomainError("fixed divisor > 1: cannot represent infinitely many primes");
    if (f.leading() <= 0) throw DomainError("census polynomial must be increasing (positive leading coefficient)");
    for (int n = 1; n <= f.degree() + 1; ++n)
        if (f.eval(n + 1) <= f.eval(n)) throw DomainError("census polynomial must be increasing on n >= 1");
}

// Largest n >= 0 that the bound admits.
u64 last_argument(const Poly& f, u64 x, BoundOn b) {
    if (b == BoundOn::Argument) return iroot(x, static_cast<unsigned>(f.degree()));
    auto le = [&](u64 n) { return f.eval(static_cast<i128>(n)) <= static_cast<i128>(x); };
    if (!le(1)) return 0;
    u64 lo = 1, hi = 2;
    while (le(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        u64 mid = lo + (hi - lo) / 2;
        (le(mid) ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace

std::vector<CensusRecord> poly_census(const Poly& f, i64 u, u64 x, const PolyCensusOptions& opt) {
    check_poly_census(f, u);
    const auto cps = checkpoints(x);
    const size_t K = cps.size();
    const int m = f.degree();
    const u64 N = last_argument(f, x, opt.bound_on);
    std::vector<u64> roots(K);
    for (size_t i = 0; i < K; ++i) roots[i] = iroot(cps[i], static_cast<unsigned>(m));

    std::vector<u64> base(K, 0), hits(K, 0);
#pragma omp parallel num_threads(resolve_threads(opt.threads))
    {
        std::vector<u64> lb(K, 0), lh(K, 0);
#pragma omp for schedule(dynamic, 256) nowait
        for (long long n = 1; n <= static_cast<long long>(N); ++n) {
            u64 v = value_at(f, static_cast<u64>(n));
            if (!is_prime(v)) continue;
            size_t k;
            if (opt.bound_on == BoundOn::Value)
                k = static_cast<size_t>(std::lower_bound(cps.begin(), cps.end(), v) - cps.begin());
            else
                k = static_cast<size_t>(std::lower_bound(roots.begin(), roots.end(), static_cast<u64>(n)) - roots.begin());
            ++lb[k];
            if (is_hit(v, u, opt.criterion)) ++lh[k];
        }
#pragma omp critical
        for (size_t k = 0; k < K; ++k) {
            base[k] += lb[k];
            hits[k] += lh[k];
        }
    }
    std::vector<CensusRecord> out;
    u64 b = 0, h = 0;
    for (size_t k = 0; k < K; ++k) {
        b += base[k];
        h += hits[k];
        out.push_back(make_record(cps[k], b, h, m));
    }
    return out;
}

std::vector<CensusRecord> poly_census_serial(const Poly& f, i64 u, u64 x, const PolyCensusOptions& opt) {
    check_poly_census(f, u);
    const int m = f.degree();
    std::vector<CensusRecord> out;
    u64 b = 0, h = 0, n = 1;
    for (u64 X : checkpoints(x)) {
        u64 N = last_argument(f, X, opt.bound_on);
        for (; n <= N; ++n) {
            u64 v = value_at(f, n);
            if (!is_prime(v)) continue;
            ++b;
            if (is_hit(v, u, opt.criterion)) ++h;
        }
        out.push_back(make_record(X, b, h, m));
    }
    return out;
}

namespace {

struct Tally {
    bool baseline = false;
    bool hit = false;
};

template <class Pred>
CensusRecord prime_census(u64 x, int threads, Pred pred) {
    if (x < 2) return make_record(x, 0, 0, 1);
    const auto base = sieve_primes(isqrt(x));
    constexpr u64 B = u64{1} << 20;
    const long long blocks = static_cast<long long>(x / B + 1);
    u64 bl = 0, ht = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : bl, ht) num_threads(resolve_threads(threads))
    for (long long i = 0; i < blocks; ++i) {
        u64 lo = static_cast<u64>(i) * B, hi = std::min(x, lo + B - 1);
        std::vector<u64> ps;
        sieve_segment(lo, hi, base, ps);
        for (u64 p : ps) {
            Tally t = pred(p);
            bl += t.baseline;
            ht += t.hit;
        }
    }
    return make_record(x, bl, ht, 1);
}

template <class Pred>
CensusRecord prime_census_serial(u64 x, Pred pred) {
    u64 bl = 0, ht = 0;
    for (u64 p : sieve_primes(x)) {
        Tally t = pred(p);
        bl += t.baseline;
        ht += t.hit;
    }
    return make_record(x, bl, ht, 1);
}

auto fixed_root_pred(i64 u, u64 q, u64 a) {
    if (u == 0) throw DomainError("u must be nonzero");
    if (q == 0 || std::gcd(a, q) != 1) throw DomainError("progression needs gcd(a, q) = 1");
    return [=](u64 p) {
        if (p % q != a % q || reduce(u, p) == 0) return Tally{};
        return Tally{true, is_primitive_root(u, p)};
    };
}

}  // namespace

CensusRecord census_fixed_root(i64 u, u64 x, u64 q, u64 a, int threads) {
    return prime_census(x, threads, fixed_root_pred(u, q, a));
}

CensusRecord census_fixed_root_serial(i64 u, u64 x, u64 q, u64 a) {
    return prime_census_serial(x, fixed_root_pred(u, q, a));
}

CensusRecord census_squarefree_totient(i64 u, u64 x, int threads) {
    if (u == 0 || u == 1 || u == -1) throw DomainError("u must not be 0 or +-1");
    return prime_census(x, threads, [=](u64 p) {
        if (reduce(u, p) == 0) return Tally{};
        auto f = factorize(p - 1);
        if (mobius(f) == 0) return Tally{};
        return Tally{true, is_primitive_root(u, p, f)};
    });
}

CensusRecord census_simultaneous(const std::vector<i64>& us, u64 x, int threads) {
    if (us.empty()) throw DomainError("simultaneous census needs at least one base");
    if (us.size() > 8) throw DomainError("simultaneous census takes at most 8 bases");
    for (i64 u : us)
        if (u == 0 || u == 1 || u == -1) throw DomainError("u must not be 0 or +-1");
    return prime_census(x, threads, [&](u64 p) {
        for (i64 u : us)
            if (reduce(u, p) == 0) return Tally{};
        auto f = factorize(p - 1);
        for (i64 u : us)
            if (!is_primitive_root(u, p, f)) return Tally{true, false};
        return Tally{true, true};
    });
}

CensusRecord census_quadratic_residue(i64 u, u64 x, int threads) {
    if (u < 4 || !is_square(static_cast<u64>(u)) || mobius(isqrt(static_cast<u64>(u))) == 0)
        throw DomainError("u must be v^2 with v >= 2 squarefree");
    return prime_census(x, threads, [=](u64 p) {
        if (p == 2 || reduce(u, p) == 0) return Tally{};
        return Tally{true, multiplicative_order(u, p) == (p - 1) / 2};
    });
}

AlgorithmFalsified::AlgorithmFalsified(LowDensityPoly r, std::vector<u64> xs)
    : InternalError([&] {
          std::string s = "x^" + std::to_string(r.exponent) + "+" + std::to_string(r.constant) + " is prime at x =";
          for (u64 v : xs) s += " " + std::to_string(v);
          return s;
      }()),
      result(std::move(r)),
      prime_at(std::move(xs)) {}

Poly LowDensityPoly::poly() const {
    if (exponent > 100000) throw CapacityError("exponent too large to expand as a coefficient list");
    std::vector<i64> c(exponent + 1, 0);
    c[0] = static_cast<i64>(constant);
    c[exponent] = 1;
    return Poly(c);
}

LowDensityPoly low_density_poly(double z, LowDensityVariant variant) {
    if (!(z >= 2) || z > 20) throw DomainError("low_density_poly: need 2 <= z <= 20");
    namespace mp = boost::multiprecision;
    LowDensityPoly r;
    const auto zs = sieve_primes(static_cast<u64>(z));
    r.n = std::accumulate(zs.begin(), zs.end(), u64{1}, std::multiplies<>());
    auto fn = factorize(r.n);
    r.exponent = variant == LowDensityVariant::Phi ? totient(fn) : carmichael(fn);
    r.constant = r.n - 1;
    r.composite_bound = std::exp(z);
    r.scanned_to = std::min<u64>(static_cast<u64>(std::floor(r.composite_bound)), 10000);

    // x missing some q <= z gives f(x) = 0 mod q, since (q-1) | exponent and n - 1 = -1 mod q.
    // Only multiples of n need a real test.
    const auto small = sieve_primes(100000);
    std::vector<u64> prime_at;
    boost::random::mt19937 gen(20240611);
    for (u64 x = r.n; x <= r.scanned_to; x += r.n) {
        if (x < 2) continue;
        double bits = static_cast<double>(r.exponent) * std::log2(static_cast<double>(x));
        if (bits < 62) {
            u64 v = 1;
            for (u64 i = 0; i < r.exponent; ++i) v *= x;
            v += r.constant;
            if (is_prime(v)) prime_at.push_back(x);
            continue;
        }
        bool split = false;
        for (u64 q : small) {
            if (q <= static_cast<u64>(z)) continue;
            if ((mod_pow(x, r.exponent, q) + r.constant) % q == 0) {
                split = true;
                break;
            }
        }
        if (split) continue;
        if (bits > 20000) {
            r.undecided.push_back(x);
            continue;
        }
        mp::cpp_int v = mp::pow(mp::cpp_int(x), static_cast<unsigned>(r.exponent)) + r.constant;
        if (mp::miller_rabin_test(v, 25, gen)) prime_at.push_back(x);
    }
    if (!prime_at.empty()) throw AlgorithmFalsified(r, prime_at);
    return r;
}

}  // namespace rc
