#include "rootcensus/poly.hpp"

#include <cctype>
#include <numeric>

#include "rootcensus/errors.hpp"

namespace rc {

Poly::Poly(std::vector<i64> c) : coeffs(std::move(c)) {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty() || (coeffs.size() == 1 && coeffs[0] == 0))
        throw DomainError("polynomial must be nonzero");
}

i128 Poly::eval(i128 n) const {
    constexpr i128 lim = static_cast<i128>(1) << 120;
    i128 v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        if (v > lim / (n < 0 ? -n + 1 : n + 1) || -v > lim / (n < 0 ? -n + 1 : n + 1))
            throw CapacityError("polynomial value exceeds 120 bits");
        v = v * n + *it;
    }
    return v;
}

u64 Poly::eval_mod(u64 n, u64 p) const {
    u64 v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = (mul_mod(v, n % p, p) + reduce(*it, p)) % p;
    return v;
}

std::string Poly::str() const {
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        i64 c = coeffs[k];
        if (c == 0) continue;
        if (!s.empty()) s += c < 0 ? "-" : "+";
        else if (c < 0) s += "-";
        u64 a = c < 0 ? static_cast<u64>(-(c + 1)) + 1 : static_cast<u64>(c);
        if (a != 1 || k == 0) s += std::to_string(a);
        if (k >= 1) s += "x";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
}

namespace {

struct Parser {
    std::string_view t;
    size_t i = 0;

    void skip() {
        while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < t.size() && t[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool digit() {
        skip();
        return i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]));
    }
    i64 number() {
        skip();
        if (!digit()) fail("expected a number");
        i64 v = 0;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
            if (v > (INT64_MAX - 9) / 10) fail("coefficient too large");
            v = v * 10 + (t[i++] - '0');
        }
        return v;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw DomainError("polynomial syntax: " + what + " at offset " + std::to_string(i) + " in '" +
                          std::string(t) + "'");
    }

    // term := [number] ['*'] [x ['^' number]]
    void term(int sign, std::vector<i64>& acc) {
        i64 c = 1;
        bool have_num = false;
        if (digit()) {
            c = number();
            have_num = true;
            eat('*');
        }
        size_t k = 0;
        skip();
        if (i < t.size() && (t[i] == 'x' || t[i] == 'n')) {
            ++i;
            k = 1;
            if (eat('^')) k = static_cast<size_t>(number());
        } else if (!have_num) {
            fail("expected a term");
        }
        if (k > 1000) fail("degree above 1000");
        if (acc.size() <= k) acc.resize(k + 1, 0);
        acc[k] += sign * c;
    }

    Poly parse() {
        std::vector<i64> acc;
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        term(sign, acc);
        for (;;) {
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else break;
            term(sign, acc);
        }
        skip();
        if (i != t.size()) fail("unexpected character");
        return Poly(acc);
    }
};

using PolyP = std::vector<u64>;  // coefficients mod p, constant first, trimmed

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP pmod(PolyP a, const PolyP& m, u64 p) {
    trim(a);
    u64 inv = mod_pow(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        u64 c = mul_mod(a.back(), inv, p);
        size_t shift = a.size() - m.size();
        for (size_t j = 0; j < m.size(); ++j) a[shift + j] = (a[shift + j] + p - mul_mod(c, m[j], p)) % p;
        trim(a);
    }
    return a;
}

PolyP pmulmod(const PolyP& a, const PolyP& b, const PolyP& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    return pmod(std::move(r), m, p);
}

}  // namespace

Poly parse_poly(std::string_view text) { return Parser{text}.parse(); }

u64 fixed_divisor(const Poly& f) {
    if (f.degree() < 1) throw DomainError("fixed_divisor: degree must be at least 1");
    u128 g = 0;
    for (int n = 0; n <= f.degree(); ++n) {
        i128 v = f.eval(n);
        u128 a = static_cast<u128>(v < 0 ? -v : v);
        while (a) {
            u128 t = g % a;
            g = a;
            a = t;
        }
    }
    if (g > UINT64_MAX) throw CapacityError("fixed divisor above 64 bits");
    return static_cast<u64>(g);
}

u64 root_count_scan(const Poly& f, u64 p) {
    u64 c = 0;
    for (u64 n = 0; n < p; ++n)
        if (f.eval_mod(n, p) == 0) ++c;
    return c;
}

u64 root_count(const Poly& f, u64 p) {
    if (p < 2) throw DomainError("root_count: p must be prime");
    PolyP m;
    for (i64 c : f.coeffs) m.push_back(reduce(c, p));
    trim(m);
    if (m.empty()) return p;
    if (m.size() == 1) return 0;
    if (p <= 64) return root_count_scan(f, p);
    // x^p mod m
    PolyP r{1}, base = pmod(PolyP{0, 1}, m, p);
    for (u64 e = p; e; e >>= 1) {
        if (e & 1) r = pmulmod(r, base, m, p);
        base = pmulmod(base, base, m, p);
    }
    if (r.size() < 2) r.resize(2, 0);
    r[1] = (r[1] + p - 1) % p;  // x^p - x
    trim(r);
    PolyP a = m, b = r;
    while (!b.empty()) {
        PolyP t = pmod(a, b, p);
        a = std::move(b);
        b = std::move(t);
    }
    return a.size() - 1;
}

}  // namespace rc
