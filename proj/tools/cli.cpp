#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <functional>
#include <map>

#include "report.hpp"
#include "rootcensus/census.hpp"
#include "rootcensus/densities.hpp"
#include "rootcensus/elliptic.hpp"
#include "rootcensus/errors.hpp"
#include "rootcensus/expansions.hpp"
#include "rootcensus/orders.hpp"
#include "rootcensus/smooth.hpp"

namespace rc::cli {

namespace {

using report::fixed;
using report::Table;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string str(u64 v) { return std::to_string(v); }
std::string str(i64 v) { return std::to_string(v); }

u64 bound(const std::string& s, const char* what) {
    try {
        return report::parse_bound(s);
    } catch (const std::exception& e) {
        throw UsageError(fmt::format("{}: {}", what, e.what()));
    }
}

std::pair<i64, i64> parse_curve(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("--curve expects a,b");
    try {
        size_t i = 0, j = 0;
        i64 a = std::stoll(s.substr(0, comma), &i), b = std::stoll(s.substr(comma + 1), &j);
        if (i != comma || j != s.size() - comma - 1) throw UsageError("--curve expects integers a,b");
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("--curve expects integers a,b");
    }
}

std::vector<i64> parse_list(const std::string& s) {
    std::vector<i64> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        auto next = s.find(',', pos);
        std::string item = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw UsageError("bad list item: " + item);
        } catch (const std::logic_error&) {
            throw UsageError("bad list item: " + item);
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

Table census_table(const std::vector<CensusRecord>& rows) {
    Table t{{"x", "baseline", "hits", "ratio", "c_estimate"}, {}};
    for (const auto& r : rows) t.add({str(r.x), str(r.baseline), str(r.hits), fixed(r.ratio, 6), fixed(r.c_estimate, 6)});
    return t;
}

Table check_table(u64 p, const IdentityCheck& c) {
    Table t{{"p", "value", "expected", "holds"}, {}};
    t.add({str(p), str(c.value), str(c.expected), c.applicable ? report::boolean(c.holds) : "n/a"});
    return t;
}

DensityResult named_or_series(const std::string& name, std::optional<u64> trunc) {
    static const std::map<std::string, const char*> series{{"s2", "x^2+1"}, {"s3", "x^3+2"}, {"s4", "x^4+1"}};
    if (auto it = series.find(name); it != series.end())
        return singular_series(parse_poly(it->second), trunc.value_or(kSeriesTruncation));
    auto c = constant_from_name(name);
    if (!c) throw UsageError("unknown constant: " + name);
    return named_constant(*c, trunc.value_or(kDefaultTruncation));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rootcensus: primitive-root censuses, density constants, expansions, elliptic curves"};
    app.fallthrough();
    app.require_subcommand(1);

    int threads = 0;
    std::string format = "csv";
    int precision = 9;
    app.add_option("--threads", threads, "worker threads (0 = all)")->envname("RC_THREADS")->check(CLI::NonNegativeNumber);
    app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    auto* prec_opt = app.add_option("--precision", precision, "decimal places for reals")->check(CLI::Range(0, 30));

    Table table;
    std::function<void()> action;
    auto bind = [&](CLI::App* sub, std::function<void()> fn) { sub->callback([&action, fn] { action = fn; }); };

    // census
    auto* census = app.add_subcommand("census", "primitive-root censuses")->require_subcommand(1);
    std::string f_text, x_text = "1e6", criterion = "primitive", bound_on = "value", u_list;
    i64 u = 2;
    std::string q_text = "1", a_text = "0";
    {
        auto* s = census->add_subcommand("poly", "hits among prime values of f");
        s->add_option("--f", f_text, "polynomial, e.g. x^2+1")->required();
        s->add_option("--u", u)->required();
        s->add_option("--x", x_text);
        s->add_option("--criterion", criterion)->check(CLI::IsMember({"primitive", "least"}));
        s->add_option("--bound-on", bound_on)->check(CLI::IsMember({"value", "argument"}));
        bind(s, [&] {
            PolyCensusOptions o;
            o.criterion = criterion == "least" ? Criterion::LeastPrimitiveRoot : Criterion::PrimitiveRoot;
            o.bound_on = bound_on == "argument" ? BoundOn::Argument : BoundOn::Value;
            o.threads = threads;
            table = census_table(poly_census(parse_poly(f_text), u, bound(x_text, "--x"), o));
        });
    }
    {
        auto* s = census->add_subcommand("fixed", "primes p <= x, p = a mod q, with u a primitive root");
        s->add_option("--u", u)->required();
        s->add_option("--x", x_text);
        s->add_option("--q", q_text);
        s->add_option("--a", a_text);
        bind(s, [&] {
            table = census_table({census_fixed_root(u, bound(x_text, "--x"), bound(q_text, "--q"), bound(a_text, "--a"), threads)});
        });
    }
    {
        auto* s = census->add_subcommand("squarefree", "u a primitive root and p - 1 squarefree");
        s->add_option("--u", u)->required();
        s->add_option("--x", x_text);
        bind(s, [&] { table = census_table({census_squarefree_totient(u, bound(x_text, "--x"), threads)}); });
    }
    {
        auto* s = census->add_subcommand("simultaneous", "every listed base a primitive root");
        s->add_option("--u", u_list, "comma separated bases")->required();
        s->add_option("--x", x_text);
        bind(s, [&] { table = census_table({census_simultaneous(parse_list(u_list), bound(x_text, "--x"), threads)}); });
    }
    {
        auto* s = census->add_subcommand("qr", "u = v^2 of order (p - 1)/2");
        s->add_option("--u", u)->required();
        s->add_option("--x", x_text);
        bind(s, [&] { table = census_table({census_quadratic_residue(u, bound(x_text, "--x"), threads)}); });
    }

    // constants
    std::string const_name, trunc_text;
    {
        auto* s = app.add_subcommand("constants", "Euler-product density constants");
        s->add_option("--name", const_name)->required();
        s->add_option("--trunc", trunc_text, "truncation prime bound");
        bind(s, [&] {
            std::optional<u64> trunc;
            if (!trunc_text.empty()) trunc = bound(trunc_text, "--trunc");
            auto r = named_or_series(const_name, trunc);
            int pr = prec_opt->count() ? precision : 12;
            table = Table{{"name", "value", "truncation_prime", "tail_bound"}, {}};
            table.add({const_name, r.zero_density ? fixed(0, pr) : fixed(r.value, pr), str(r.truncation_prime), report::sci(r.tail_bound, 2)});
        });
    }

    // expand
    auto* expand = app.add_subcommand("expand", "repeating expansions")->require_subcommand(1);
    std::string n_text, base_text = "10", r_text;
    {
        auto* s = expand->add_subcommand("period", "period of 1/n in a base");
        s->add_option("--n", n_text)->required();
        s->add_option("--base", base_text);
        bind(s, [&] {
            u64 n = bound(n_text, "--n"), b = bound(base_text, "--base");
            table = Table{{"n", "base", "period"}, {}};
            table.add({str(n), str(b), str(expansion_period(n, b))});
        });
    }
    {
        auto* s = expand->add_subcommand("block", "repeating block of 1/n; with --r the order-r block digit sum");
        s->add_option("--n", n_text)->required();
        s->add_option("--base", base_text);
        s->add_option("--r", r_text);
        bind(s, [&] {
            u64 n = bound(n_text, "--n"), b = bound(base_text, "--base");
            if (!r_text.empty()) {
                u64 r = bound(r_text, "--r");
                auto d = block_digit_sum(n, b, r);
                table = Table{{"p", "base", "r", "sum", "predicted", "residual"}, {}};
                table.add({str(n), str(b), str(r), str(d.sum), fixed(d.predicted, precision), report::sci(d.residual, 2)});
                return;
            }
            auto rec = repeating_block(n, b);
            table = Table{{"n", "base", "period", "digits"}, {}};
            table.add({str(n), str(b), str(rec.period), digit_string(rec.digits, b)});
        });
    }
    {
        auto* s = expand->add_subcommand("wieferich", "base^(p-1) = 1 mod p^2");
        s->add_option("--p", n_text)->required();
        s->add_option("--base", base_text);
        bind(s, [&] {
            u64 p = bound(n_text, "--p"), b = bound(base_text, "--base");
            table = Table{{"p", "base", "wieferich"}, {}};
            table.add({str(p), str(b), report::boolean(is_wieferich(p, b))});
        });
    }

    // class
    auto* klass = app.add_subcommand("class", "class numbers and digit identities")->require_subcommand(1);
    bool real_field = false;
    {
        auto* s = klass->add_subcommand("h", "class number of Q(sqrt(-p)), or Q(sqrt(p)) with --real");
        s->add_option("--p", n_text)->required();
        s->add_flag("--real", real_field);
        bind(s, [&] {
            u64 p = bound(n_text, "--p");
            table = Table{{"p", "h"}, {}};
            table.add({str(p), real_field ? fixed(real_class_number(p), precision) : str(class_number_imag(p))});
        });
    }
    {
        auto* s = klass->add_subcommand("girstmair", "alternating digit sum of 1/p against h(-p)");
        s->add_option("--p", n_text)->required();
        s->add_option("--base", base_text);
        bind(s, [&] {
            u64 p = bound(n_text, "--p");
            table = check_table(p, girstmair_check(p, bound(base_text, "--base")));
        });
    }
    {
        auto* s = klass->add_subcommand("hirzebruch", "alternating continued-fraction sum of sqrt(p) against 3 h(-p)");
        s->add_option("--p", n_text)->required();
        bind(s, [&] {
            u64 p = bound(n_text, "--p");
            table = check_table(p, hirzebruch_check(p));
        });
    }
    {
        auto* s = klass->add_subcommand("cfrac", "continued fraction of sqrt(N) and the fundamental unit");
        s->add_option("--n", n_text)->required();
        bind(s, [&] {
            u64 N = bound(n_text, "--n");
            auto cf = sqrt_continued_fraction(N);
            std::string period;
            for (u64 a : cf.period) period += (period.empty() ? "" : " ") + str(a);
            auto u128s = [](u128 v) {
                std::string s;
                do {
                    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
                    v /= 10;
                } while (v);
                return s;
            };
            auto fu = fundamental_unit(N);
            table = Table{{"n", "a0", "length", "period", "unit_x", "unit_y", "norm"}, {}};
            table.add({str(N), str(cf.a0), str(static_cast<u64>(cf.period.size())), period, u128s(fu.x), u128s(fu.y), std::to_string(fu.norm)});
        });
    }

    // elliptic
    auto* elliptic = app.add_subcommand("elliptic", "curves y^2 = x^3 + a x + b")->require_subcommand(1);
    std::string curve_text, p_text, d_text = "1", mode = "table";
    bool include_bad = false;
    elliptic->add_option("--curve", curve_text, "a,b")->required();
    auto curve = [&] { return parse_curve(curve_text); };
    {
        auto* s = elliptic->add_subcommand("order", "#E(F_p) and a_p");
        s->add_option("--p", p_text)->required();
        bind(s, [&] {
            auto [a, b] = curve();
            Trace t = frobenius_trace(a, b, bound(p_text, "--p"));
            table = Table{{"p", "n", "ap", "bad"}, {}};
            table.add({str(t.p), str(static_cast<u64>(static_cast<i64>(t.p) + (t.bad ? 0 : 1) - t.ap)), str(t.ap), report::boolean(t.bad)});
        });
    }
    {
        auto* s = elliptic->add_subcommand("structure", "E(F_p) = Z/d x Z/e");
        s->add_option("--p", p_text)->required();
        bind(s, [&] {
            auto [a, b] = curve();
            Curve E = make_curve(a, b, bound(p_text, "--p"));
            auto g = group_structure(E);
            table = Table{{"p", "n", "d", "e", "cyclic", "gcd_criterion"}, {}};
            table.add({str(E.p), str(g.n), str(g.d), str(g.e), report::boolean(g.d == 1), report::boolean(std::gcd(g.n, E.p - 1) == 1)});
        });
    }
    auto census_rows = [&] {
        auto [a, b] = curve();
        return prime_order_census(a, b, bound(x_text, "--x"), bound(d_text, "--d"), include_bad, threads);
    };
    {
        auto* s = elliptic->add_subcommand("census", "primes p <= x with #E(F_p)/d prime");
        s->add_option("--x", x_text);
        s->add_option("--d", d_text);
        s->add_flag("--include-bad", include_bad, "count nonsingular points at primes of bad reduction");
        bind(s, [&] {
            table = Table{{"p", "n", "n_over_d", "flag_bad"}, {}};
            for (const auto& r : census_rows()) table.add({str(r.p), str(r.n), str(r.n_over_d), report::boolean(r.bad)});
        });
    }
    {
        auto* s = elliptic->add_subcommand("brun", "sum of 1/p over the census primes");
        s->add_option("--x", x_text);
        s->add_option("--d", d_text);
        s->add_flag("--include-bad", include_bad);
        bind(s, [&] {
            auto rows = census_rows();
            table = Table{{"x", "d", "primes", "brun"}, {}};
            table.add({str(bound(x_text, "--x")), str(bound(d_text, "--d")), str(static_cast<u64>(rows.size())), fixed(elliptic_brun(rows), precision)});
        });
    }
    {
        auto* s = elliptic->add_subcommand("traces", "a_p for 3 <= p <= x");
        s->add_option("--x", x_text);
        bind(s, [&] {
            auto [a, b] = curve();
            table = Table{{"p", "ap", "bad"}, {}};
            for (const auto& t : frobenius_traces(a, b, bound(x_text, "--x"), threads)) table.add({str(t.p), str(t.ap), report::boolean(t.bad)});
        });
    }
    {
        auto* s = elliptic->add_subcommand("satotate", "histogram of a_p / (2 sqrt p), 20 bins on [-1, 1]");
        s->add_option("--x", x_text);
        bind(s, [&] {
            auto [a, b] = curve();
            std::vector<u64> bins(20, 0);
            for (double z : sato_tate_series(a, b, bound(x_text, "--x"), threads))
                ++bins[std::min<size_t>(19, static_cast<size_t>(std::floor((z + 1) * 10)))];
            table = Table{{"bin_low", "count"}, {}};
            for (int i = 0; i < 20; ++i) table.add({fixed(-1 + 0.1L * i, 2), str(bins[i])});
        });
    }
    {
        auto* s = elliptic->add_subcommand("divisor", "gcd of #E(F_p) over split primes");
        s->add_option("--mode", mode)->check(CLI::IsMember({"table", "empirical"}));
        bind(s, [&] {
            auto [a, b] = curve();
            table = Table{{"a", "b", "mode", "d"}, {}};
            table.add({str(a), str(b), mode, str(elliptic_divisor(a, b, mode == "table" ? DivisorMode::Table : DivisorMode::Empirical))});
        });
    }

    // smooth
    auto* smooth = app.add_subcommand("smooth", "smooth-number counts")->require_subcommand(1);
    std::vector<std::string> pos;
    {
        auto* s = smooth->add_subcommand("psi", "psi x y");
        s->add_option("values", pos)->expected(2)->required();
        bind(s, [&] {
            u64 x = bound(pos[0], "x"), y = bound(pos[1], "y");
            table = Table{{"x", "y", "psi"}, {}};
            table.add({str(x), str(y), str(psi_count(x, y, threads))});
        });
    }
    {
        auto* s = smooth->add_subcommand("theta", "theta x y z");
        s->add_option("values", pos)->expected(3)->required();
        bind(s, [&] {
            u64 x = bound(pos[0], "x"), y = bound(pos[1], "y"), z = bound(pos[2], "z");
            table = Table{{"x", "y", "z", "theta"}, {}};
            table.add({str(x), str(y), str(z), str(theta_count(x, y, z, threads))});
        });
    }
    {
        auto* s = smooth->add_subcommand("rho", "rho u");
        s->add_option("values", pos)->expected(1)->required();
        bind(s, [&] {
            long double v;
            try {
                size_t used = 0;
                v = std::stold(pos[0], &used);
                if (used != pos[0].size()) throw UsageError("u must be a real number");
            } catch (const std::logic_error&) {
                throw UsageError("u must be a real number");
            }
            table = Table{{"u", "rho"}, {}};
            table.add({pos[0], fixed(dickman_rho(v), precision)});
        });
    }

    // orders
    auto* orders = app.add_subcommand("orders", "multiplicative orders")->require_subcommand(1);
    {
        auto* s = orders->add_subcommand("ord", "order of u modulo n");
        s->add_option("--u", u)->required();
        s->add_option("--n", n_text)->required();
        bind(s, [&] {
            u64 n = bound(n_text, "--n");
            table = Table{{"u", "n", "order"}, {}};
            table.add({str(u), str(n), str(order_mod(u, n))});
        });
    }
    {
        auto* s = orders->add_subcommand("proot", "least primitive root mod p");
        s->add_option("--p", p_text)->required();
        bind(s, [&] {
            u64 p = bound(p_text, "--p");
            if (!is_prime(p)) throw DomainError("proot: p must be prime");
            table = Table{{"p", "least_primitive_root"}, {}};
            table.add({str(p), str(least_primitive_root(p))});
        });
    }
    {
        auto* s = orders->add_subcommand("relative", "ord_p(u)/(p-1) for p <= x (plot data)");
        s->add_option("--u", u)->required();
        s->add_option("--x", x_text);
        bind(s, [&] {
            table = Table{{"p", "relative_order"}, {}};
            for (const auto& r : relative_order_series(u, bound(x_text, "--x"), threads)) table.add({str(r.p), fixed(r.relative_order(), precision)});
        });
    }
    {
        auto* s = orders->add_subcommand("charcheck", "character-sum primitive-root indicators against the order test");
        s->add_option("--u", u)->required();
        s->add_option("--p", p_text)->required();
        bind(s, [&] {
            u64 p = bound(p_text, "--p");
            double d1 = char_indicator_divisor(u, p), d2 = char_indicator_divisorfree(u, p);
            bool direct = is_primitive_root(u, p);
            table = Table{{"p", "u", "divisor", "divisorfree", "direct", "agree"}, {}};
            table.add({str(p), str(u), fixed(d1, 0), fixed(d2, 0), report::boolean(direct), report::boolean((d1 == 1) == direct && (d2 == 1) == direct)});
        });
    }
    {
        auto* s = orders->add_subcommand("expsum", "max over a of |sum over primitive roots of e(a g / p)|");
        s->add_option("--p", p_text)->required();
        bind(s, [&] {
            u64 p = bound(p_text, "--p");
            auto e = exp_sum_max(p);
            table = Table{{"p", "max_abs", "a", "ratio_to_sqrt_p"}, {}};
            table.add({str(p), fixed(e.max_abs, precision), str(e.a), fixed(e.max_abs / std::sqrt(static_cast<double>(p)), precision)});
        });
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    try {
        if (!action) throw UsageError("no command");
        action();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    out << report::render(table, format == "json" ? report::Format::Json : report::Format::Csv);
    return 0;
}

}  // namespace rc::cli
