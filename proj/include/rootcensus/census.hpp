#pragma once

#include <vector>

#include "rootcensus/arith.hpp"
#include "rootcensus/errors.hpp"
#include "rootcensus/poly.hpp"

namespace rc {

struct CensusRecord {
    u64 x = 0;
    u64 baseline = 0;
    u64 hits = 0;
    double ratio = 0;       // hits / baseline
    double c_estimate = 0;  // hits * log(y) / y with y = x^(1/m)

    bool operator==(const CensusRecord&) const = default;
};

// What makes a prime p = f(n) a hit for u.
enum class Criterion {
    PrimitiveRoot,       // ord_p(u) = p - 1
    LeastPrimitiveRoot,  // u is the least primitive root mod p
};

// Which quantity the bound x limits.
enum class BoundOn {
    Value,     // f(n) <= x
    Argument,  // 1 <= n <= floor(x^(1/m))
};

struct PolyCensusOptions {
    Criterion criterion = Criterion::PrimitiveRoot;
    BoundOn bound_on = BoundOn::Value;
    int threads = 0;
};

// Rows at every 10^k <= x, plus x itself when it is not a power of ten.
std::vector<CensusRecord> poly_census(const Poly& f, i64 u, u64 x, const PolyCensusOptions& opt = {});
std::vector<CensusRecord> poly_census_serial(const Poly& f, i64 u, u64 x, const PolyCensusOptions& opt = {});

CensusRecord census_fixed_root(i64 u, u64 x, u64 q = 1, u64 a = 0, int threads = 0);
CensusRecord census_fixed_root_serial(i64 u, u64 x, u64 q = 1, u64 a = 0);

CensusRecord census_squarefree_totient(i64 u, u64 x, int threads = 0);
CensusRecord census_simultaneous(const std::vector<i64>& us, u64 x, int threads = 0);
CensusRecord census_quadratic_residue(i64 u, u64 x, int threads = 0);

enum class LowDensityVariant { Phi, Lambda };

struct LowDensityPoly {
    u64 n = 0;         // product of the primes <= z
    u64 exponent = 0;  // phi(n) or lambda(n)
    u64 constant = 0;  // n - 1
    double composite_bound = 0;  // e^z
    u64 scanned_to = 0;
    std::vector<u64> undecided;  // x whose value was too large for a primality test

    Poly poly() const;  // capacity error for exponents above 10^5
};

// Raised when the verification scan meets a prime value.
struct AlgorithmFalsified : InternalError {
    LowDensityPoly result;
    std::vector<u64> prime_at;
    AlgorithmFalsified(LowDensityPoly r, std::vector<u64> xs);
};

LowDensityPoly low_density_poly(double z, LowDensityVariant variant);

}  // namespace rc
