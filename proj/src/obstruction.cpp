#include "moore/obstruction.hpp"

#include "moore/ktheory.hpp"
#include "moore/trunc_series.hpp"

#include <stdexcept>

namespace moore {

namespace {

void require_prime(std::int64_t p, const char* who) {
    if (p < 2 || !is_prime(Int(p))) {
        throw NotPrimeError(std::string(who) + ": p = " + std::to_string(p) + " is not prime");
    }
}

std::int64_t checked_index(const Int& value, const char* who) {
    if (value > kMaxScanIndex) {
        throw std::invalid_argument(std::string(who) + ": scan index " + value.str() +
                                    " exceeds the supported range");
    }
    return static_cast<std::int64_t>(value);
}

// Builds the report for restriction degree c at the prime p: scans
// v_p(c/i) for the first negative valuation and cross-checks the closed
// form p^{v_p(c)+1} against it.
ObstructionReport build_report(std::int64_t p, const Rational& c) {
    const Int prime(p);
    const Valuation vc = padic_valuation(c, prime);
    if (c.is_zero() || vc.value() < 0) {
        throw std::invalid_argument("obstruction report: c must be nonzero with v_p(c) >= 0");
    }
    const std::int64_t closed_form =
        checked_index(int_pow(prime, vc.value() + 1), "obstruction report");

    ObstructionReport report;
    report.p = p;
    report.k = vc.value() + 1;
    report.c = c;
    report.first_failure = 0;
    for (std::int64_t i = 1; i <= closed_form; ++i) {
        const std::int64_t v = padic_valuation(c / Rational(i), prime).value();
        report.valuations.emplace_back(i, v);
        if (v < 0) {
            report.first_failure = i;
            break;
        }
    }
    if (report.first_failure != closed_form) {
        throw std::logic_error("obstruction report: scan disagrees with closed form p^(v_p(c)+1)");
    }
    report.n_max = report.first_failure - 1;
    return report;
}

// First index i in [1, modulus) whose coefficient is not p-integral.
std::optional<std::int64_t> scan_series(const QSeries& f, std::int64_t p) {
    const Int prime(p);
    for (Eigen::Index i = 1; i < f.modulus(); ++i) {
        if (!is_p_integral(f[i], prime)) {
            return i;
        }
    }
    return std::nullopt;
}

// Both routes for one restriction degree: the scan of c*log(1+x) and the
// scan of the solver output, which must agree coefficient-exactly.
struct RouteResult {
    bool routes_equal = false;
    std::optional<std::int64_t> oracle_failure;
    std::optional<std::int64_t> solver_failure;
};

RouteResult run_routes(std::int64_t q, std::int64_t modulus, const Rational& c, std::int64_t p) {
    const QSeries oracle = scale(c, log_series(modulus));
    const QSeries solved = solve_fixed_series(q, modulus, c);
    RouteResult result;
    result.routes_equal = oracle == solved;
    result.oracle_failure = scan_series(oracle, p);
    result.solver_failure = scan_series(solved, p);
    return result;
}

}  // namespace

std::int64_t find_generator(std::int64_t p) {
    require_prime(p, "find_generator");
    if (p == 2) {
        throw std::invalid_argument("find_generator: p must be odd (q = 3 is fixed at p = 2)");
    }
    const Int p_squared = Int(p) * p;
    const Int target = Int(p) * (p - 1);
    for (Int q = 2;; ++q) {
        if (q == p || !is_prime(q)) {
            continue;
        }
        if (multiplicative_order(q, p_squared) == target) {
            return static_cast<std::int64_t>(q);
        }
        if (q > p_squared) {
            throw std::logic_error("find_generator: no generator below p^2");
        }
    }
}

DegreeDecomposition degree_decompose(std::int64_t p, std::int64_t q, std::int64_t e) {
    require_prime(p, "degree_decompose");
    if (q < 2) {
        throw std::invalid_argument("degree_decompose: q must be >= 2");
    }
    if (e < 1) {
        throw std::invalid_argument("degree_decompose: exponent must be >= 1");
    }
    if (q % p == 0) {
        throw std::invalid_argument("degree_decompose: q must be coprime to p");
    }
    Int remainder = int_pow(Int(q), e) - 1;
    std::int64_t k = 0;
    while (remainder % p == 0) {
        remainder /= p;
        ++k;
    }
    DegreeDecomposition d;
    d.p = p;
    d.base = q;
    d.exponent = e;
    d.k = k;
    d.lambda_residue = static_cast<std::int64_t>(remainder % p);
    return d;
}

std::int64_t first_failure_index(std::int64_t p, const Rational& c) {
    require_prime(p, "first_failure_index");
    return build_report(p, c).first_failure;
}

ObstructionReport an_bound(std::int64_t p, std::int64_t k) {
    require_prime(p, "an_bound");
    if (p == 2) {
        throw std::invalid_argument("an_bound: p must be odd; use an_bound_p2");
    }
    if (k < 1) {
        throw std::invalid_argument("an_bound: k must be >= 1");
    }
    const Rational c(Int(p - 1) * int_pow(Int(p), k - 1));
    ObstructionReport report = build_report(p, c);
    const std::int64_t expected = checked_index(int_pow(Int(p), k), "an_bound") - 1;
    if (report.n_max != expected || report.k != k) {
        throw std::logic_error("an_bound: report does not match p^k - 1");
    }
    return report;
}

std::pair<ObstructionReport, ObstructionReport> an_bound_p2(std::int64_t k) {
    if (k < 2) {
        throw std::invalid_argument("an_bound_p2: k must be >= 2");
    }
    checked_index(int_pow(Int(2), k + 1), "an_bound_p2");
    ObstructionReport lower = build_report(2, Rational(int_pow(Int(2), k - 1)));
    ObstructionReport upper = build_report(2, Rational(int_pow(Int(2), k)));
    if (lower.n_max != (std::int64_t(1) << k) - 1 ||
        upper.first_failure != (std::int64_t(1) << (k + 1))) {
        throw std::logic_error("an_bound_p2: reports do not match the 2^k bounds");
    }
    return {std::move(lower), std::move(upper)};
}

TheoremVerification verify_theorem(std::int64_t p, std::int64_t k) {
    require_prime(p, "verify_theorem");
    TheoremVerification out;
    if (p == 2) {
        if (k < 2) {
            throw std::invalid_argument("verify_theorem: k must be >= 2 at p = 2");
        }
        auto [lower, upper] = an_bound_p2(k);
        const RouteResult low = run_routes(3, lower.first_failure + 1, lower.c, 2);
        const RouteResult up = run_routes(3, upper.first_failure + 1, upper.c, 2);
        out.consistent = low.routes_equal && up.routes_equal &&
                         low.oracle_failure == lower.first_failure &&
                         low.solver_failure == lower.first_failure &&
                         up.oracle_failure == upper.first_failure &&
                         up.solver_failure == upper.first_failure;
        out.report = std::move(lower);
        out.upper = std::move(upper);
        return out;
    }
    if (k < 1) {
        throw std::invalid_argument("verify_theorem: k must be >= 1");
    }
    ObstructionReport report = an_bound(p, k);
    const std::int64_t q = find_generator(p);
    const RouteResult routes = run_routes(q, report.first_failure + 1, report.c, p);
    out.consistent = routes.routes_equal && routes.oracle_failure == report.first_failure &&
                     routes.solver_failure == report.first_failure;
    out.report = std::move(report);
    return out;
}

}  // namespace moore
