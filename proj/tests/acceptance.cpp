// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fails. Every expected value and runtime budget is pinned here; nothing is
// deferred to later calibration.

#include "moore/ktheory.hpp"
#include "moore/obstruction.hpp"
#include "moore/trunc_series.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace moore;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name;
    if (!detail.empty()) {
        std::cout << " (" << detail << ")";
    }
    std::cout << "\n";
    if (!ok) {
        ++failures;
    }
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string("'") + MOORE_CLI_PATH + "' " + args + " 2>/dev/null";
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string seconds_string(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

// Criterion 1: `verify --p P --k 1` reproduces n_max = P - 1 for
// P in {3,5,7,11,13}; exact equality, under 1 s total.
void criterion_1() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        CliResult r = run_cli("verify --p " + std::to_string(p) + " --k 1 --format json");
        if (r.exit_code != 0) {
            ok = false;
            detail = "exit code " + std::to_string(r.exit_code) + " at p = " + std::to_string(p);
            break;
        }
        const auto doc = nlohmann::json::parse(r.output, nullptr, false);
        if (doc.is_discarded() || doc["n_max"] != p - 1) {
            ok = false;
            detail = "wrong n_max at p = " + std::to_string(p);
            break;
        }
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed >= 1.0) {
        ok = false;
        detail = "took " + seconds_string(elapsed) + ", budget 1s";
    } else if (detail.empty()) {
        detail = seconds_string(elapsed);
    }
    report(1, "A_{p-1}/not-A_p reproduction via `verify --p P --k 1`", ok, detail);
}

// Criterion 2: an_bound(p, k).n_max = p^k - 1 for p in {3,5,7}, k in
// {1,2,3}, scan cross-checked against the closed form; under 5 s.
void criterion_2() {
    const auto start = Clock::now();
    bool ok = true;
    for (std::int64_t p : {3, 5, 7}) {
        for (std::int64_t k = 1; k <= 3; ++k) {
            const ObstructionReport r = an_bound(p, k);
            const std::int64_t expected = static_cast<std::int64_t>(int_pow(Int(p), k)) - 1;
            // n_max derives from the scan; re-derive the closed form here.
            const std::int64_t v = padic_valuation(r.c, Int(p)).value();
            const std::int64_t closed = static_cast<std::int64_t>(int_pow(Int(p), v + 1)) - 1;
            ok = ok && r.n_max == expected && closed == expected;
        }
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    ok = ok && elapsed < 5.0;
    report(2, "an_bound(p,k).n_max = p^k - 1 on {3,5,7} x {1,2,3}", ok, seconds_string(elapsed));
}

// Criterion 3: p = 2 pair for k in {2..6}: lower n_max = 2^k - 1 and upper
// first failure 2^{k+1}; exact equality.
void criterion_3() {
    bool ok = true;
    for (std::int64_t k = 2; k <= 6; ++k) {
        const auto [lower, upper] = an_bound_p2(k);
        ok = ok && lower.n_max == (std::int64_t(1) << k) - 1;
        ok = ok && upper.first_failure == (std::int64_t(1) << (k + 1));
    }
    report(3, "p = 2 pair: lower n_max 2^k - 1, upper failure 2^{k+1}, k in {2..6}", ok);
}

// Criterion 4: solve_fixed_series(q, m, c) = c * log series, 588 exact
// comparisons over q in {2,3,5,7}, m in {2..50}, c in {1, -3, 7/2};
// under 10 s.
void criterion_4() {
    const auto start = Clock::now();
    const Rational constants[] = {Rational(1), Rational(-3), Rational(Int(7), Int(2))};
    int compared = 0;
    int equal = 0;
    for (std::int64_t q : {2, 3, 5, 7}) {
        for (Eigen::Index m = 2; m <= 50; ++m) {
            for (const Rational& c : constants) {
                ++compared;
                if (solve_fixed_series(q, m, c) == scale(c, log_series(m))) {
                    ++equal;
                }
            }
        }
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    const bool ok = compared == 588 && equal == 588 && elapsed < 10.0;
    report(4, "solver = c*log(1+x), 588 exact comparisons", ok,
           std::to_string(equal) + "/" + std::to_string(compared) + " equal, " +
               seconds_string(elapsed));
}

// Criterion 5: the residual f((1+x)^q - 1) - q f vanishes identically for
// every solver output of criterion 4.
void criterion_5() {
    const Rational constants[] = {Rational(1), Rational(-3), Rational(Int(7), Int(2))};
    bool ok = true;
    for (std::int64_t q : {2, 3, 5, 7}) {
        for (Eigen::Index m = 2; m <= 50; ++m) {
            for (const Rational& c : constants) {
                const QSeries f = solve_fixed_series(q, m, c);
                const QSeries residual =
                    compose(f, adams_argument(q, m)) - scale(Rational(q), f);
                ok = ok && residual.is_zero();
            }
        }
    }
    report(5, "functional-equation residual vanishes for every solver output", ok);
}

// Criterion 6: dim fixed_subspace(q, n) = 1 and the normalized basis equals
// the truncated log coefficients, q in {2,3}, n in {1..30}; under 10 s.
void criterion_6() {
    const auto start = Clock::now();
    bool ok = true;
    for (std::int64_t q : {2, 3}) {
        for (Eigen::Index n = 1; n <= 30; ++n) {
            const auto basis = fixed_subspace(q, n);
            if (basis.size() != 1) {
                ok = false;
                continue;
            }
            const QSeries expected = log_series(n + 1);
            for (Eigen::Index i = 0; i < n; ++i) {
                ok = ok && basis[0][i] == expected[i + 1];
            }
        }
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    ok = ok && elapsed < 10.0;
    report(6, "equalizer dimension 1 with log-coefficient basis, n <= 30", ok,
           seconds_string(elapsed));
}

// Criterion 7: v_p(q^((p-1)p^(k-1)) - 1) = k for q = find_generator(p),
// p in {3,5,7,11}, k <= 5; and v_2(3^(2^(k-1)) - 1) = k + 1 for k in
// {2..10}; exact big-integer checks under 1 s.
void criterion_7() {
    const auto start = Clock::now();
    bool ok = true;
    for (std::int64_t p : {3, 5, 7, 11}) {
        const std::int64_t q = find_generator(p);
        std::int64_t exponent = p - 1;
        for (std::int64_t k = 1; k <= 5; ++k) {
            ok = ok && degree_decompose(p, q, exponent).k == k;
            exponent *= p;
        }
    }
    for (std::int64_t k = 2; k <= 10; ++k) {
        ok = ok && degree_decompose(2, 3, std::int64_t(1) << (k - 1)).k == k + 1;
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    ok = ok && elapsed < 1.0;
    report(7, "degree identities v_p(q^((p-1)p^(k-1)) - 1) = k and v_2(3^(2^(k-1)) - 1) = k+1",
           ok, seconds_string(elapsed));
}

// Criterion 8: generator goldens 2,2,3,2,2 for p = 3,5,7,11,13, each
// validated against an exhaustive multiplicative-order oracle mod p^2.
void criterion_8() {
    bool ok = true;
    const std::pair<std::int64_t, std::int64_t> golden[] = {{3, 2}, {5, 2}, {7, 3}, {11, 2}, {13, 2}};
    for (const auto& [p, expected_q] : golden) {
        const std::int64_t q = find_generator(p);
        ok = ok && q == expected_q;
        // Exhaustive oracle: first t with q^t = 1 mod p^2 must be p(p-1).
        const std::int64_t modulus = p * p;
        std::int64_t x = q % modulus;
        std::int64_t order = 0;
        for (std::int64_t t = 1; t <= modulus; ++t) {
            if (x == 1) {
                order = t;
                break;
            }
            x = (x * q) % modulus;
        }
        ok = ok && order == p * (p - 1);
    }
    report(8, "generator goldens with exhaustive order oracle mod p^2", ok);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 8 criteria passed\n";
    return 0;
}
