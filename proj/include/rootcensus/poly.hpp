#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rootcensus/arith.hpp"

namespace rc {

// Integer polynomial, constant term first.
struct Poly {
    std::vector<i64> coeffs;

    Poly() = default;
    explicit Poly(std::vector<i64> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    i64 leading() const { return coeffs.back(); }
    i128 eval(i128 n) const;       // throws CapacityError when an intermediate leaves 127 bits
    u64 eval_mod(u64 n, u64 p) const;
    std::string str() const;
    bool operator==(const Poly&) const = default;
};

// Caret powers with integer coefficients: "x^3+2", "326x^2+3", "4*x^2 + 1", "x^3-x".
Poly parse_poly(std::string_view text);

u64 fixed_divisor(const Poly& f);

// Distinct roots of f modulo p, via deg gcd(f, x^p - x) over F_p.
u64 root_count(const Poly& f, u64 p);
u64 root_count_scan(const Poly& f, u64 p);

}  // namespace rc
