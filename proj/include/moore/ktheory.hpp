#pragma once

#include "moore/linalg.hpp"
#include "moore/rational.hpp"
#include "moore/trunc_series.hpp"

#include <cstdint>
#include <vector>

namespace moore {

/// A class beta^b * f(e) in ku_(p)^* CP^n (x) Q, with f carried mod e^{n+1}.
/// f must vanish at e = 0; degree-2 classes are the bott_power = -1 case.
/// Powers of beta other than +-1 are accepted, but only the q^{bott_power}
/// scaling of adams_apply is specified for them and nothing downstream
/// exercises those degrees.
class KClass {
public:
    KClass(std::int64_t bott_power, QSeries series);

    std::int64_t bott_power() const { return bott_power_; }
    const QSeries& series() const { return series_; }

    friend bool operator==(const KClass& a, const KClass& b) {
        return a.bott_power_ == b.bott_power_ && a.series_ == b.series_;
    }

private:
    std::int64_t bott_power_;
    QSeries series_;
};

/// psi_q acting on beta^b f(e): beta scales by q, e becomes (1+e)^q - 1,
/// so the result is beta^b * q^b * f((1+e)^q - 1). Requires q >= 1.
KClass adams_apply(const KClass& y, std::int64_t q);

/// The unique f = sum a_i x^i mod x^m with f((1+x)^q - 1) = q f(x) and
/// leading coefficient a1, by the triangular recursion
///   a_k = -[x^k]((partial f)((1+x)^q - 1)) / (q^k - q),   k = 2..m-1,
/// where partial f carries a_1..a_{k-1}. Requires q >= 2 (q^k - q is the
/// pivot of each step and vanishes at q = 1) and m >= 2.
QSeries solve_fixed_series(std::int64_t q, Eigen::Index m, const Rational& a1);

/// Matrix of psi_q on span{beta^{-1}e^1, ..., beta^{-1}e^n}: 0-based entry
/// (i, j) holds q^{-1} * [e^{i+1}] ((1+e)^q - 1)^{j+1}. Lower triangular
/// with diagonal q^j at column index j.
struct PsiMatrix {
    std::int64_t q = 0;
    Eigen::Index n = 0;
    RationalMatrix entries;
};

/// Requires q >= 2, n >= 1. Columns are built by repeated multiplication
/// with (1+e)^q - 1 mod e^{n+1}.
PsiMatrix psi_matrix(std::int64_t q, Eigen::Index n);

/// Basis of the subspace fixed by psi_q, i.e. the kernel of
/// (psi_matrix(q, n) - I), each vector normalized to leading coefficient 1.
std::vector<RationalVector> fixed_subspace(std::int64_t q, Eigen::Index n);

}  // namespace moore
