// Command-line front end: every computation the library performs, with
// text or JSON output selected by --format (or MOORE_OBSTRUCTION_FORMAT).
//
// Exit codes are a stable contract for harnesses:
//   0  success
//   2  internal cross-check failure (the two computation routes disagree)
//   64 usage error (bad flags, non-prime p, excluded hypotheses)
//   74 output file cannot be written

#include "moore/ktheory.hpp"
#include "moore/number_theory.hpp"
#include "moore/obstruction.hpp"
#include "moore/selftest.hpp"
#include "moore/serialize.hpp"
#include "moore/trunc_series.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

using moore::Int;
using moore::Json;
using moore::ObstructionReport;
using moore::Rational;

void add_format_option(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format,
                    "output format: text or json (default: MOORE_OBSTRUCTION_FORMAT, else text)")
        ->check(CLI::IsMember({"text", "json"}));
}

// Flag wins over the environment; an unusable environment value is a usage
// error rather than a silent fallback.
std::string resolve_format(const std::string& flag_value) {
    if (!flag_value.empty()) {
        return flag_value;
    }
    const char* env = std::getenv("MOORE_OBSTRUCTION_FORMAT");
    if (env == nullptr || *env == '\0') {
        return "text";
    }
    const std::string value(env);
    if (value != "text" && value != "json") {
        throw std::invalid_argument("MOORE_OBSTRUCTION_FORMAT must be 'text' or 'json', got '" +
                                    value + "'");
    }
    return value;
}

void print_report_text(std::ostream& os, const ObstructionReport& report, const char* label) {
    os << label << "c = " << report.c << ", first failure at i = " << report.first_failure
       << ", n_max = " << report.n_max << "\n";
}

int cmd_verify(std::int64_t p, std::int64_t k, const std::string& format) {
    const moore::TheoremVerification result = moore::verify_theorem(p, k);
    if (!result.consistent) {
        std::cerr << "verify: internal cross-check failure: the valuation scan and the "
                     "functional-equation solver disagree for p = "
                  << p << ", k = " << k << "\n";
        return kExitInternal;
    }
    if (format == "json") {
        if (result.upper) {
            Json doc{{"p", p},
                     {"k", k},
                     {"lower", to_json(result.report)},
                     {"upper", to_json(*result.upper)}};
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << to_json(result.report).dump(2) << "\n";
        }
        return kExitOk;
    }
    std::cout << "verify p=" << p << " k=" << k << ": consistent\n";
    if (result.upper) {
        print_report_text(std::cout, result.report, "lower: ");
        std::cout << "upper: c = " << result.upper->c << ", first failure at i = "
                  << result.upper->first_failure << "\n";
        std::cout << "A_n for n <= " << result.report.n_max << "; no A_"
                  << result.upper->first_failure << " structure\n";
    } else {
        print_report_text(std::cout, result.report, "");
        std::cout << "A_n for n < " << result.report.first_failure << " and no further\n";
    }
    return kExitOk;
}

int cmd_solve(std::int64_t q, std::int64_t m, const std::string& a1_text,
              const std::string& format) {
    const Rational a1 = Rational::from_string(a1_text);
    const moore::QSeries f = moore::solve_fixed_series(q, m, a1);
    // Residual check travels through the public composition path, which is
    // independent of the solver's internal recursion.
    const moore::QSeries residual =
        compose(f, moore::adams_argument(q, m)) - moore::scale(Rational(q), f);
    if (!residual.is_zero()) {
        std::cerr << "solve: internal cross-check failure: nonzero residual "
                  << to_string(residual) << "\n";
        return kExitInternal;
    }
    if (format == "json") {
        Json doc{{"q", q},
                 {"m", m},
                 {"a1", a1.to_string()},
                 {"series", to_json(f)},
                 {"residual_zero", true}};
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << moore::terms_string(f) << "\n";
    std::cout << "modulus: x^" << m << "\n";
    std::cout << "residual: 0 (f((1+x)^q - 1) - q*f vanishes identically)\n";
    return kExitOk;
}

int cmd_generator(std::int64_t p, const std::string& format) {
    if (p == 2) {
        if (format == "json") {
            Json doc{{"p", 2}, {"q", 3}, {"note", "fixed by convention"}};
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "3 (fixed by convention)\n";
        }
        return kExitOk;
    }
    const std::int64_t q = moore::find_generator(p);
    const Int order = moore::multiplicative_order(Int(q), Int(p) * p);
    if (format == "json") {
        Json doc{{"p", p}, {"q", q}, {"order", order.str()}, {"modulus", p * p}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << q << " (order " << order << " mod " << p * p << ")\n";
    }
    return kExitOk;
}

int cmd_matrix(std::int64_t q, std::int64_t n, const std::string& format) {
    const moore::PsiMatrix psi = moore::psi_matrix(q, n);
    const auto basis = moore::fixed_subspace(q, n);
    if (format == "json") {
        Json doc = to_json(psi);
        doc["kernel_dimension"] = basis.size();
        doc["kernel_basis"] = to_json(basis);
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "psi_" << q << " on ku^2(CP^" << n << ") (x) Q, basis beta^{-1}e^1.."
              << "e^" << n << ":\n";
    // Column-aligned exact entries.
    std::vector<std::size_t> width(n, 0);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            width[j] = std::max(width[j], psi.entries(i, j).to_string().size());
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        std::cout << "[ ";
        for (Eigen::Index j = 0; j < n; ++j) {
            std::string s = psi.entries(i, j).to_string();
            std::cout << std::string(width[j] - s.size(), ' ') << s << (j + 1 < n ? "  " : "");
        }
        std::cout << " ]\n";
    }
    std::cout << "kernel of (psi_" << q << " - I): dimension " << basis.size() << "\n";
    for (const auto& v : basis) {
        std::cout << "( ";
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            std::cout << v[i] << (i + 1 < v.size() ? ", " : "");
        }
        std::cout << " )\n";
    }
    return kExitOk;
}

struct TableRow {
    ObstructionReport main;
    std::optional<ObstructionReport> upper;
};

int cmd_table(std::vector<std::int64_t> primes, std::int64_t kmax, const std::string& format,
              const std::string& out_path) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (std::int64_t p : primes) {
        if (!moore::is_prime(Int(p))) {
            throw moore::NotPrimeError("table: p = " + std::to_string(p) + " is not prime");
        }
    }
    if (kmax < 1) {
        throw std::invalid_argument("table: kmax must be >= 1");
    }

    const bool has_two = std::find(primes.begin(), primes.end(), 2) != primes.end();
    std::vector<TableRow> rows;
    for (std::int64_t p : primes) {
        for (std::int64_t k = (p == 2 ? 2 : 1); k <= kmax; ++k) {
            TableRow row;
            if (p == 2) {
                auto [lower, upper] = moore::an_bound_p2(k);
                row.main = std::move(lower);
                row.upper = std::move(upper);
            } else {
                row.main = moore::an_bound(p, k);
            }
            rows.push_back(std::move(row));
        }
    }

    std::ostringstream body;
    if (format == "json") {
        Json doc;
        doc["rows"] = Json::array();
        for (const TableRow& row : rows) {
            Json entry{{"p", row.main.p},
                       {"k", row.main.k},
                       {"c", row.main.c.to_string()},
                       {"first_failure", row.main.first_failure},
                       {"n_max", row.main.n_max}};
            if (row.upper) {
                entry["upper_c"] = row.upper->c.to_string();
                entry["upper_first_failure"] = row.upper->first_failure;
            }
            doc["rows"].push_back(std::move(entry));
        }
        body << doc.dump(2) << "\n";
    } else {
        body << "p,k,c,first_failure,n_max" << (has_two ? ",upper_c,upper_first_failure" : "")
             << "\n";
        for (const TableRow& row : rows) {
            body << moore::csv_row(row.main);
            if (has_two) {
                if (row.upper) {
                    body << "," << row.upper->c << "," << row.upper->first_failure;
                } else {
                    body << ",,";
                }
            }
            body << "\n";
        }
    }

    if (out_path.empty()) {
        std::cout << body.str();
        return kExitOk;
    }
    std::ofstream file(out_path);
    if (!file) {
        std::cerr << "table: cannot open '" << out_path << "' for writing\n";
        return kExitIo;
    }
    file << body.str();
    file.flush();
    if (!file) {
        std::cerr << "table: failed writing '" << out_path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation of the maximal A_n-structure on mod p^k Moore spectra "
                 "induced by spherical fibrations"};
    app.name("moore-obstruction");
    app.require_subcommand(0, 1);

    bool selftest = false;
    app.add_flag("--selftest", selftest,
                 "run the embedded invariant suite (solver vs log oracle, fixed-subspace "
                 "dimensions, degree identities) and exit");

    std::int64_t p = 0;
    std::int64_t k = 0;
    std::int64_t q = 0;
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t kmax = 0;
    std::string a1_text;
    std::vector<std::int64_t> prime_list;
    std::string out_path;
    std::string fmt_verify;
    std::string fmt_solve;
    std::string fmt_generator;
    std::string fmt_matrix;
    std::string fmt_table;

    CLI::App* verify = app.add_subcommand(
        "verify", "check n_max = p^k - 1 (odd p; lower/upper pair at p = 2) by two routes");
    verify->add_option("--p", p, "prime p")->required();
    verify->add_option("--k", k, "exponent k >= 1 (k >= 2 when p = 2)")->required();
    add_format_option(verify, fmt_verify);

    CLI::App* solve = app.add_subcommand(
        "solve", "solve f((1+x)^q - 1) = q f(x) mod x^m for the given leading coefficient");
    solve->add_option("--q", q, "q > 1")->required();
    solve->add_option("--m", m, "truncation modulus m >= 2")->required();
    solve->add_option("--a1", a1_text, "leading coefficient, e.g. 1 or 7/2")->required();
    add_format_option(solve, fmt_solve);

    CLI::App* table = app.add_subcommand("table", "n_max over a (p, k) grid as CSV or JSON");
    table->add_option("--p", prime_list, "comma-separated primes, e.g. 3,5,7")
        ->required()
        ->delimiter(',');
    table->add_option("--kmax", kmax, "largest k")->required();
    table->add_option("--out", out_path, "output path (stdout when omitted)");
    add_format_option(table, fmt_table);

    CLI::App* generator =
        app.add_subcommand("generator", "smallest prime generating the p-adic units");
    generator->add_option("--p", p, "prime p")->required();
    add_format_option(generator, fmt_generator);

    CLI::App* matrix =
        app.add_subcommand("matrix", "psi_q matrix on ku^2(CP^n) (x) Q and its fixed subspace");
    matrix->add_option("--q", q, "q >= 2")->required();
    matrix->add_option("--n", n, "n >= 1")->required();
    add_format_option(matrix, fmt_matrix);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (selftest) {
            const moore::SelftestResult result = moore::run_selftest(std::cout);
            return result.failed == 0 ? kExitOk : kExitInternal;
        }
        if (verify->parsed()) {
            return cmd_verify(p, k, resolve_format(fmt_verify));
        }
        if (solve->parsed()) {
            return cmd_solve(q, m, a1_text, resolve_format(fmt_solve));
        }
        if (table->parsed()) {
            return cmd_table(prime_list, kmax, resolve_format(fmt_table), out_path);
        }
        if (generator->parsed()) {
            if (p != 2 && !moore::is_prime(Int(p))) {
                throw moore::NotPrimeError("generator: p = " + std::to_string(p) +
                                           " is not prime");
            }
            return cmd_generator(p, resolve_format(fmt_generator));
        }
        if (matrix->parsed()) {
            return cmd_matrix(q, n, resolve_format(fmt_matrix));
        }
        std::cerr << app.help() << std::flush;
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
