#include "report.hpp"

#include <fmt/format.h>

#include <cctype>
#include <stdexcept>

namespace rc::report {

void Table::add(std::vector<std::string> row) {
    if (row.size() != columns.size()) throw std::logic_error("report row width mismatch");
    rows.push_back(std::move(row));
}

namespace {

bool numeric(const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    bool digit = false, dot = false, exp = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) digit = true;
        else if (c == '.' && !dot && !exp) dot = true;
        else if ((c == 'e' || c == 'E') && digit && !exp) {
            exp = true;
            digit = false;
            if (i + 1 < s.size() && (s[i + 1] == '-' || s[i + 1] == '+')) ++i;
        } else return false;
    }
    return digit;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string render(const Table& t, Format f) {
    std::string out;
    if (f == Format::Csv) {
        for (size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
        out += '\n';
        for (const auto& r : t.rows) {
            for (size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + r[i];
            out += '\n';
        }
        return out;
    }
    out = "[";
    for (size_t k = 0; k < t.rows.size(); ++k) {
        out += k ? ",\n {" : "\n {";
        for (size_t i = 0; i < t.columns.size(); ++i) {
            const auto& v = t.rows[k][i];
            out += fmt::format("{}{}: {}", i ? ", " : "", quote(t.columns[i]),
                               numeric(v) || v == "true" || v == "false" ? v : quote(v));
        }
        out += "}";
    }
    out += t.rows.empty() ? "]\n" : "\n]\n";
    return out;
}

std::string fixed(long double v, int precision) {
    std::string s = fmt::format("{:.{}f}", v, precision);
    if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);  // no "-0.000"
    return s;
}

std::string sci(long double v, int precision) { return fmt::format("{:.{}e}", v, precision); }

std::string boolean(bool v) { return v ? "true" : "false"; }

unsigned long long parse_bound(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("not a nonnegative integer bound: " + s); };
    std::string mant = s, ex;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        mant = s.substr(0, e);
        ex = s.substr(e + 1);
        if (!ex.empty() && ex[0] == '+') ex.erase(0, 1);
        if (ex.empty() || ex.size() > 2 || ex.find_first_not_of("0123456789") != std::string::npos) throw bad();
    }
    std::string ip = mant, fp;
    if (auto d = mant.find('.'); d != std::string::npos) {
        ip = mant.substr(0, d);
        fp = mant.substr(d + 1);
    }
    if (ip.empty() && fp.empty()) throw bad();
    if ((ip + fp).find_first_not_of("0123456789") != std::string::npos) throw bad();
    int shift = ex.empty() ? 0 : std::stoi(ex);
    std::string digits = ip + fp;
    shift -= static_cast<int>(fp.size());
    while (shift < 0) {
        if (digits.empty() || digits.back() != '0') throw bad();
        digits.pop_back();
        ++shift;
    }
    digits.append(static_cast<size_t>(shift), '0');
    auto first = digits.find_first_not_of('0');
    if (first == std::string::npos) return 0;
    digits = digits.substr(first);
    if (digits.size() > 20) throw std::out_of_range("bound exceeds 64 bits: " + s);
    unsigned long long v = 0;
    for (char c : digits) {
        unsigned d = static_cast<unsigned>(c - '0');
        if (v > (~0ULL - d) / 10) throw std::out_of_range("bound exceeds 64 bits: " + s);
        v = v * 10 + d;
    }
    return v;
}

}  // namespace rc::report
