#include "moore/selftest.hpp"

#include "moore/ktheory.hpp"
#include "moore/obstruction.hpp"
#include "moore/trunc_series.hpp"

#include <array>
#include <ostream>

namespace moore {

namespace {

struct SuiteCounter {
    int passed = 0;
    int failed = 0;
    void check(bool ok) { ok ? ++passed : ++failed; }
};

SuiteCounter lemma_oracle_suite() {
    SuiteCounter counter;
    const std::array<Rational, 3> constants = {Rational(1), Rational(-3), Rational(Int(7), Int(2))};
    for (std::int64_t q : {2, 3, 5, 7}) {
        for (Eigen::Index m = 2; m <= 30; ++m) {
            for (const Rational& c : constants) {
                counter.check(solve_fixed_series(q, m, c) == scale(c, log_series(m)));
            }
        }
    }
    return counter;
}

SuiteCounter kernel_dimension_suite() {
    SuiteCounter counter;
    for (std::int64_t q : {2, 3}) {
        for (Eigen::Index n = 1; n <= 20; ++n) {
            const auto basis = fixed_subspace(q, n);
            if (basis.size() != 1) {
                counter.check(false);
                continue;
            }
            const QSeries expected = log_series(n + 1);
            bool match = true;
            for (Eigen::Index i = 0; i < n; ++i) {
                match = match && basis[0][i] == expected[i + 1];
            }
            counter.check(match);
        }
    }
    return counter;
}

SuiteCounter degree_identity_suite() {
    SuiteCounter counter;
    for (std::int64_t p : {3, 5, 7, 11}) {
        const std::int64_t q = find_generator(p);
        std::int64_t exponent = p - 1;  // (p-1) p^{k-1}
        for (std::int64_t k = 1; k <= 5; ++k) {
            counter.check(degree_decompose(p, q, exponent).k == k);
            exponent *= p;
        }
    }
    for (std::int64_t k = 2; k <= 10; ++k) {
        counter.check(degree_decompose(2, 3, std::int64_t(1) << (k - 1)).k == k + 1);
    }
    return counter;
}

void report(std::ostream& os, const char* name, const SuiteCounter& suite,
            SelftestResult& total) {
    os << name << ": " << suite.passed << "/" << (suite.passed + suite.failed) << " passed\n";
    total.passed += suite.passed;
    total.failed += suite.failed;
}

}  // namespace

SelftestResult run_selftest(std::ostream& os) {
    SelftestResult total;
    report(os, "lemma-oracle equivalence", lemma_oracle_suite(), total);
    report(os, "fixed-subspace dimensions", kernel_dimension_suite(), total);
    report(os, "degree identities", degree_identity_suite(), total);
    os << "selftest: " << total.passed << " passed, " << total.failed << " failed\n";
    return total;
}

}  // namespace moore
