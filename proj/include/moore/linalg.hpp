#pragma once

#include "moore/eigen_support.hpp"

#include <vector>

namespace moore {

/// Basis of the kernel of a, one vector per free column, ordered by free
/// column index and normalized so the first nonzero coordinate is 1.
///
/// Rows are first cleared to integers (each scaled by the lcm of its
/// denominators, which leaves the kernel unchanged), then reduced by
/// fraction-free Bareiss elimination so intermediate entries stay minors of
/// the scaled matrix instead of growing as unreduced fractions. Every
/// Bareiss division is checked to be exact; a nonzero remainder is a logic
/// error, not an input error.
std::vector<RationalVector> kernel_basis(const RationalMatrix& a);

}  // namespace moore
