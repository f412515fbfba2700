#pragma once

#include <string>
#include <vector>

#include "rootcensus/arith.hpp"

namespace rc {

struct ExpansionRecord {
    u64 n = 0;
    u64 base = 0;
    u64 period = 0;
    std::vector<u64> digits;  // x_1 .. x_d, x_1 first after the radix point
};

u64 expansion_period(u64 n, u64 base);
ExpansionRecord repeating_block(u64 n, u64 base);
// First `count` digits of the fractional part of num/n.
std::vector<u64> expansion_digits(u64 num, u64 n, u64 base, u64 count);
// Digits 0-9a-z for bases up to 36, dot separated above.
std::string digit_string(const std::vector<u64>& digits, u64 base);

bool is_wieferich(u64 p, u64 base);

u64 class_number_imag(u64 p);

struct ContinuedFraction {
    u64 a0 = 0;
    std::vector<u64> period;
};
ContinuedFraction sqrt_continued_fraction(u64 N);

struct FundamentalUnit {
    u128 x = 0, y = 0;
    int norm = 1;
};
FundamentalUnit fundamental_unit(u64 d);

// h(p) for p = 3 mod 4 from the finite sine-product formula for L(1, chi_{4p}).
long double real_class_number(u64 p);

struct IdentityCheck {
    i64 value = 0;
    i64 expected = 0;
    bool holds = false;
    bool applicable = true;
};

IdentityCheck girstmair_check(u64 p, u64 base);
IdentityCheck hirzebruch_check(u64 p);

struct BlockDigitSum {
    u64 sum = 0;
    long double bernoulli_term = 0;  // sum of B_{1,chi} over odd chi whose order divides r
    long double predicted = 0;
    long double residual = 0;
};
BlockDigitSum block_digit_sum(u64 p, u64 base, u64 r);

}  // namespace rc
