#pragma once

#include <iosfwd>

namespace moore {

struct SelftestResult {
    int passed = 0;
    int failed = 0;
};

/// One-command reproduction of the computational identities: the
/// functional-equation solver against c*log(1+x), the one-dimensional fixed
/// subspaces and their log coefficients, and the lifting-the-exponent degree
/// identities. Prints one summary line per suite plus a total.
SelftestResult run_selftest(std::ostream& os);

}  // namespace moore
