#pragma once

#include <functional>
#include <optional>
#include <string>

#include "rootcensus/arith.hpp"
#include "rootcensus/poly.hpp"

namespace rc {

using real = long double;

struct ProductSpec {
    std::string name;
    std::function<real(u64)> local_factor;
    u64 prime_floor = 2;
    int decay_exponent = 2;  // |1 - factor(p)| <= numerator * p^-decay_exponent
    real numerator = 1;
};

struct DensityResult {
    real value = 0;
    u64 truncation_prime = 0;
    real tail_bound = 0;
    bool zero_density = false;  // set when a fixed divisor forces density 0
};

inline constexpr u64 kDefaultTruncation = 10'000'000;
inline constexpr u64 kSeriesTruncation = 100'000;

DensityResult euler_product(const ProductSpec& spec, u64 P);

enum class Constant {
    Artin,
    CyclicC0,
    PrimitivePoint,
    KoblitzP0,
    RelativeOrderC,
    SimultaneousB,
    SquarefreeTotientA0Sq,
};

std::optional<Constant> constant_from_name(const std::string& name);  // "artin", "cyclic_c0", ...
std::string constant_name(Constant c);
ProductSpec constant_spec(Constant c);  // not defined for SquarefreeTotientA0Sq
DensityResult named_constant(Constant c, u64 P = kDefaultTruncation);

// Decomposition u = (s v^2)^k, k maximal, s squarefree.
struct PowerShape {
    u64 s = 1, v = 1, k = 1;
};
PowerShape power_shape(u64 u);

DensityResult corrected_density(i64 u, u64 P = kDefaultTruncation);
DensityResult progression_density(i64 u, u64 q, u64 a, u64 k, u64 P = kDefaultTruncation);

DensityResult singular_series(const Poly& f, u64 P = kSeriesTruncation);
// (1/2) prod_{p>2} (1 - (-1|p)/(p-1)), the x^2+1 series written without root counts.
DensityResult quadratic_series_legendre(u64 P = kSeriesTruncation);

DensityResult koblitz_delta1(i64 D, u64 P = kDefaultTruncation);
DensityResult cyclic_corrected(i64 D, u64 P = kDefaultTruncation);

}  // namespace rc
