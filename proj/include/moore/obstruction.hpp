#pragma once

#include "moore/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace moore {

/// Result of the p-integrality scan of c * sum (-1)^{i+1} e^i / i: the
/// first index whose coefficient leaves Z_(p), and with it the largest n
/// for which the class extends over CP^n. first_failure always equals
/// p^{v_p(c)+1}; the scan is the ground truth and the closed form is
/// cross-checked against it.
struct ObstructionReport {
    std::int64_t p = 0;
    std::int64_t k = 0;  // v_p(c) + 1
    Rational c;
    std::int64_t first_failure = 0;
    std::int64_t n_max = 0;  // first_failure - 1
    std::vector<std::pair<std::int64_t, std::int64_t>> valuations;  // (i, v_p(c/i)), i = 1..first_failure
};

/// q^e - 1 = p^k * lambda with lambda prime to p; k = v_p(q^e - 1) and
/// lambda is reported by its nonzero residue mod p.
struct DegreeDecomposition {
    std::int64_t p = 0;
    std::int64_t base = 0;
    std::int64_t exponent = 0;
    std::int64_t k = 0;
    std::int64_t lambda_residue = 0;
};

/// Outcome of verify_theorem: the two independent routes (log-series scan
/// and functional-equation solver) and their agreement. For p = 2 the
/// report is the achieved lower bound and `upper` carries the impossibility
/// certificate; for odd p `upper` is empty.
struct TheoremVerification {
    bool consistent = false;
    ObstructionReport report;
    std::optional<ObstructionReport> upper;
};

/// Largest first-failure index the valuation scans will attempt; the scan
/// is linear in p^k, so bigger grids are rejected as invalid input rather
/// than left to run for hours.
inline constexpr std::int64_t kMaxScanIndex = std::int64_t(1) << 24;

/// Smallest prime q != p whose multiplicative order mod p^2 is
/// phi(p^2) = p(p-1); such q generates the p-adic units topologically.
/// p must be an odd prime.
std::int64_t find_generator(std::int64_t p);

/// Exact decomposition q^e - 1 = p^k * lambda. Requires p prime, q >= 2,
/// e >= 1 and gcd(q, p) = 1.
DegreeDecomposition degree_decompose(std::int64_t p, std::int64_t q, std::int64_t e);

/// Smallest i with v_p(c/i) < 0, which is p^{v_p(c)+1}; both the closed
/// form and the scan are computed and a mismatch throws std::logic_error.
/// Requires c != 0 and v_p(c) >= 0.
std::int64_t first_failure_index(std::int64_t p, const Rational& c);

/// Full report for the restriction degree c = (p-1) p^{k-1} of an odd
/// prime p: n_max comes out as p^k - 1.
ObstructionReport an_bound(std::int64_t p, std::int64_t k);

/// The p = 2 pair for k >= 2: the lower report (c = 2^{k-1}, first failure
/// 2^k) certifies the structure that exists on M_2(k+1); the upper report
/// (c = 2^k * lambda, first failure 2^{k+1}) certifies the one that cannot.
/// The scan result does not depend on the odd unit lambda, so lambda = 1 is
/// used; the K-theoretic degree 2^k * lambda itself is taken as input, not
/// rederived from real K-theory.
std::pair<ObstructionReport, ObstructionReport> an_bound_p2(std::int64_t k);

/// Recomputes n_max two independent ways: a valuation scan of
/// c * log(1+e), and the same scan applied to the functional-equation
/// solver's output at q = find_generator(p) (q = 3 at p = 2). The flag is
/// true iff both routes give coefficient-identical series and the expected
/// bound: n_max = p^k - 1 for odd p, the lower/upper pair for p = 2.
TheoremVerification verify_theorem(std::int64_t p, std::int64_t k);

}  // namespace moore
