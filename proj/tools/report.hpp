#pragma once

#include <string>
#include <vector>

namespace rc::report {

enum class Format { Csv, Json };

// Column-oriented output. Cells are preformatted; JSON emits numeric-looking cells bare
// and quotes the rest.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row);
};

std::string render(const Table& t, Format f);

std::string fixed(long double v, int precision);
std::string sci(long double v, int precision);  // for tail bounds
std::string boolean(bool v);

// "1000", "1e12", "2.5e3"; must denote a nonnegative integer.
unsigned long long parse_bound(const std::string& s);

}  // namespace rc::report
