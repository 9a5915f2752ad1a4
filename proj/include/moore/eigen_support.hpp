#pragma once

#include "moore/rational.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

namespace Eigen {

// Registers moore::Rational as an exact Eigen scalar. Costs are rough
// relative weights; epsilon and dummy_precision are zero because the
// arithmetic is exact.
template <>
struct NumTraits<moore::Rational> : GenericNumTraits<moore::Rational> {
    typedef moore::Rational Real;
    typedef moore::Rational NonInteger;
    typedef moore::Rational Nested;

    static inline Real epsilon() { return moore::Rational(0); }
    static inline Real dummy_precision() { return moore::Rational(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 120,
        MulCost = 80,
    };
};

}  // namespace Eigen

namespace moore {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace moore
