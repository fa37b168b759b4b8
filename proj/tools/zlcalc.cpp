// zlcalc - exact integer arithmetic on Lucas-number Zeckendorf forms.
//
// Operands are decimal by default; prefix a canonical digit string with
// "z:" to pass it directly (the bare string "10" would be ambiguous).
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 internal error.

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zecklucas/arithmetic.hpp"
#include "zecklucas/audit.hpp"
#include "zecklucas/core.hpp"

namespace {

using namespace zeck;

BigInt parse_decimal(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && s[0] == '-') {
        negative = true;
        s.erase(0, 1);
    }
    if (s.empty()) throw ParseError("empty decimal operand");
    for (char c : s) {
        if (c < '0' || c > '9')
            throw ParseError(std::string("invalid character '") + c + "' in decimal operand");
    }
    s.erase(0, std::min(s.find_first_not_of('0'), s.size() - 1));
    BigInt v(s);
    return negative ? BigInt(-v) : v;
}

ZeckLucas parse_operand(const std::string& text) {
    if (text.rfind("z:", 0) == 0) return parse_bits(text.substr(2));
    return encode(parse_decimal(text));
}

void print_value(const ZeckLucas& v, const std::string& format) {
    if (format == "bits")
        std::cout << format_bits(v) << '\n';
    else if (format == "dec")
        std::cout << decode(v) << '\n';
    else
        std::cout << format_bits(v) << " = " << decode(v) << '\n';
}

std::pair<long long, long long> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
        throw CLI::ValidationError("range", "expected <lo>:<hi>, got '" + text + "'");
    try {
        return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected <lo>:<hi>, got '" + text + "'");
    }
}

void print_summary(const AuditReport& report, const std::vector<int>& props) {
    PropSummary total;
    for (int p : props) {
        const auto& s = report.for_prop(static_cast<Prop>(p));
        std::cout << to_string(static_cast<Prop>(p)) << ": passed=" << s.passed
                  << " failed=" << s.failed << " skipped=" << s.skipped << '\n';
        total.passed += s.passed;
        total.failed += s.failed;
        total.skipped += s.skipped;
    }
    std::cout << "total: passed=" << total.passed << " failed=" << total.failed
              << " skipped=" << total.skipped << '\n';
}

int run_audit_command(const std::string& prop, const std::string& k_range,
                      const std::string& n_range, const std::string& out_path,
                      const std::string& format, bool lucas_form) {
    AuditGrid grid;
    if (prop == "all") {
        grid.props = {1, 2, 3, 4, 5};
    } else {
        grid.props = {std::stoi(prop)};
    }
    if (lucas_form && grid.props != std::vector<int>{5})
        throw CLI::ValidationError("--lucas-form", "only meaningful with --prop 5");
    grid.lucas_form = lucas_form;
    std::tie(grid.k_lo, grid.k_hi) = parse_range(k_range);
    std::tie(grid.n_lo, grid.n_hi) = parse_range(n_range);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        if (!file) throw SinkError("cannot open report file: " + out_path);
        out = &file;
    }

    AuditReport report;
    if (format == "json") {
        JsonSink sink(*out);
        report = run_audit(grid, &sink);
    } else {
        CsvSink sink(*out);
        report = run_audit(grid, &sink);
    }
    print_summary(report, grid.props);
    return 0;
}

// Exhaustive differential sweep against big-integer arithmetic plus the
// worked examples from the tables. Returns true when every check passes.
bool run_selftest(long long max_n) {
    bool all_ok = true;
    const auto section = [&all_ok](const char* name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << '\n';
        all_ok = all_ok && ok;
    };

    {
        bool ok = true;
        ok = ok && format_bits(add(parse_bits("10001000"), parse_bits("1000010"))) == "100001010";
        ok = ok && format_bits(add(parse_bits("100010"), parse_bits("1000010"))) == "10000001";
        ok = ok && format_bits(sub(parse_bits("10100001"), parse_bits("10000100"))) == "10100";
        ok = ok && format_bits(mul(parse_bits("101001"), parse_bits("10100"))) == "10100000000";
        std::vector<TrialStep> trace;
        const auto [q, r] = divmod(encode(250), encode(17), &trace);
        ok = ok && format_bits(q) == "100100" && format_bits(r) == "100010";
        ok = ok && trace.size() == 2 && trace[0].index == 5 && decode(trace[0].residue) == 63 &&
             trace[1].index == 2 && decode(trace[1].residue) == 12;
        section("worked examples", ok);
    }
    {
        bool ok = true;
        for (long long n = 0; n <= max_n && ok; ++n) {
            const ZeckLucas zl = encode(n);
            std::vector<std::int32_t> digits(zl.digits().begin(), zl.digits().end());
            ok = decode(zl) == n && validate(digits) && parse_bits(format_bits(zl)) == zl;
        }
        section("round-trip / canonicity / text form", ok);
    }
    const long long pair_max = std::min<long long>(max_n, 400);
    std::vector<ZeckLucas> enc;
    for (long long n = 0; n <= std::min<long long>(max_n, 1000); ++n) enc.push_back(encode(n));
    {
        bool ok = true;
        for (long long a = 0; a <= pair_max && ok; ++a) {
            for (long long b = 0; b <= pair_max && ok; ++b) {
                const int s = a < b ? -1 : a > b ? 1 : 0;
                const Ordering o = compare(enc[a], enc[b]);
                ok = o == (s < 0 ? Ordering::Less : s > 0 ? Ordering::Greater : Ordering::Equal);
                ok = ok && decode(add(enc[a], enc[b])) == a + b;
                if (ok && a >= b) ok = decode(sub(enc[a], enc[b])) == a - b;
            }
        }
        section("compare/add/sub sweep", ok);
    }
    {
        bool ok = true;
        const long long mul_max = std::min<long long>(max_n, 200);
        for (long long a = 0; a <= mul_max && ok; ++a)
            for (long long b = 0; b <= mul_max && ok; ++b)
                ok = decode(mul(enc[a], enc[b])) == a * b;
        section("mul sweep", ok);
    }
    {
        bool ok = true;
        const long long div_a = std::min<long long>(max_n, 1000);
        const long long div_b = std::min<long long>(max_n, 150);
        for (long long a = 0; a <= div_a && ok; ++a) {
            for (long long b = 1; b <= div_b && ok; ++b) {
                const auto [q, r] = divmod(enc[a], enc[b]);
                ok = decode(q) == a / b && decode(r) == a % b;
            }
        }
        section("divmod sweep", ok);
    }
    std::cout << (all_ok ? "selftest: PASS" : "selftest: FAIL") << '\n';
    return all_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact integer arithmetic on Lucas-number Zeckendorf forms"};
    app.require_subcommand(1);

    std::function<int()> action;

    {
        auto* cmd = app.add_subcommand("encode", "decimal -> canonical digit string");
        auto n = std::make_shared<std::string>();
        cmd->add_option("n", *n, "nonnegative decimal integer")->required();
        cmd->callback([n, &action] {
            action = [n] {
                std::cout << format_bits(encode(parse_decimal(*n))) << '\n';
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("decode", "canonical digit string -> decimal");
        auto bits = std::make_shared<std::string>();
        cmd->add_option("bits", *bits, "digit string, most significant first")->required();
        cmd->callback([bits, &action] {
            action = [bits] {
                std::cout << decode(parse_bits(*bits)) << '\n';
                return 0;
            };
        });
    }

    const auto binary_op = [&app, &action](const char* name, const char* help, auto op) {
        auto* cmd = app.add_subcommand(name, help);
        auto x = std::make_shared<std::string>();
        auto y = std::make_shared<std::string>();
        auto format = std::make_shared<std::string>("both");
        cmd->add_option("x", *x, "left operand (decimal, or z:<digits>)")->required();
        cmd->add_option("y", *y, "right operand (decimal, or z:<digits>)")->required();
        cmd->add_option("--format", *format, "output form (default both)")
            ->check(CLI::IsMember({"bits", "dec", "both"}));
        cmd->callback([x, y, format, op, &action] {
            action = [x, y, format, op] {
                op(parse_operand(*x), parse_operand(*y), *format);
                return 0;
            };
        });
    };
    binary_op("add", "x + y", [](const ZeckLucas& a, const ZeckLucas& b, const std::string& f) {
        print_value(add(a, b), f);
    });
    binary_op("sub", "x - y (requires x >= y)",
              [](const ZeckLucas& a, const ZeckLucas& b, const std::string& f) {
                  print_value(sub(a, b), f);
              });
    binary_op("mul", "x * y", [](const ZeckLucas& a, const ZeckLucas& b, const std::string& f) {
        print_value(mul(a, b), f);
    });
    binary_op("divmod", "quotient and remainder of x / y",
              [](const ZeckLucas& a, const ZeckLucas& b, const std::string& f) {
                  const auto [q, r] = divmod(a, b);
                  print_value(q, f);
                  print_value(r, f);
              });

    {
        auto* cmd =
            app.add_subcommand("audit", "evaluate the product/quotient identities over a grid");
        auto prop = std::make_shared<std::string>();
        auto k_range = std::make_shared<std::string>();
        auto n_range = std::make_shared<std::string>();
        auto out_path = std::make_shared<std::string>();
        auto format = std::make_shared<std::string>("csv");
        auto lucas_form = std::make_shared<bool>(false);
        cmd->add_option("--prop", *prop, "identity to audit")
            ->required()
            ->check(CLI::IsMember({"1", "2", "3", "4", "5", "all"}));
        cmd->add_option("--k", *k_range, "k grid as <lo>:<hi>")->required();
        cmd->add_option("--n", *n_range, "n grid as <lo>:<hi>")->required();
        cmd->add_option("--out", *out_path, "report file (default: standard output)");
        cmd->add_option("--format", *format, "report format (default csv)")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_flag("--lucas-form", *lucas_form,
                      "audit the compact Lucas-number form of the quotient identity "
                      "(diagnostic; known to disagree)");
        cmd->callback([prop, k_range, n_range, out_path, format, lucas_form, &action] {
            action = [prop, k_range, n_range, out_path, format, lucas_form] {
                return run_audit_command(*prop, *k_range, *n_range, *out_path, *format,
                                         *lucas_form);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("selftest", "exhaustive sweep against integer arithmetic");
        auto max_n = std::make_shared<long long>(1000);
        cmd->add_option("--max", *max_n, "sweep limit (default 1000)")
            ->check(CLI::NonNegativeNumber);
        cmd->callback([max_n, &action] {
            action = [max_n] { return run_selftest(*max_n) ? 0 : 3; };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const auto fail = [](const char* kind, const std::exception& e) {
        std::cerr << "zlcalc: " << kind << ": " << e.what() << '\n';
    };
    try {
        return action ? action() : 1;
    } catch (const CLI::Error& e) {
        std::cerr << "zlcalc: " << e.what() << '\n';
        return 1;
    } catch (const NegativeResult& e) {
        fail("NegativeResult", e);
    } catch (const DivisionByZero& e) {
        fail("DivisionByZero", e);
    } catch (const ZeroMultiplicand& e) {
        fail("ZeroMultiplicand", e);
    } catch (const ParseError& e) {
        fail("ParseError", e);
    } catch (const CanonicityError& e) {
        fail("CanonicityError", e);
    } catch (const PreconditionViolated& e) {
        fail("PreconditionViolated", e);
    } catch (const SinkError& e) {
        fail("SinkError", e);
    } catch (const DomainError& e) {
        fail("DomainError", e);
    } catch (const InternalError& e) {
        fail("InternalError", e);
        return 3;
    }
    return 2;
}
