#include "moore/ktheory.hpp"

#include <stdexcept>

namespace moore {

KClass::KClass(std::int64_t bott_power, QSeries series)
    : bott_power_(bott_power), series_(std::move(series)) {
    if (!series_[0].is_zero()) {
        throw std::invalid_argument("KClass: series must have zero constant term");
    }
}

KClass adams_apply(const KClass& y, std::int64_t q) {
    if (q < 1) {
        throw std::invalid_argument("adams_apply: q must be >= 1");
    }
    const QSeries substituted = compose(y.series(), adams_argument(q, y.series().modulus()));
    return KClass(y.bott_power(), pow(Rational(q), y.bott_power()) * substituted);
}

QSeries solve_fixed_series(std::int64_t q, Eigen::Index m, const Rational& a1) {
    if (q <= 1) {
        throw std::invalid_argument("solve_fixed_series: q must be > 1");
    }
    if (m < 2) {
        throw std::invalid_argument("solve_fixed_series: modulus must be >= 2");
    }
    const QSeries g = adams_argument(q, m);

    // Powers g^j mod x^m, j = 1..m-1; g^j starts at x^j with leading
    // coefficient q^j, so [x^k] of the substituted prefix only needs
    // powers up to j = k-1.
    std::vector<QSeries> g_pow;
    g_pow.reserve(m - 1);
    g_pow.push_back(g);
    for (Eigen::Index j = 2; j < m; ++j) {
        g_pow.push_back(g_pow.back() * g);
    }

    QSeries::CoeffVector coeffs = QSeries::CoeffVector::Constant(m, Rational(0));
    coeffs[1] = a1;
    for (Eigen::Index k = 2; k < m; ++k) {
        // d_k = (q^k - q) a_k + sum_{j<k} a_j [x^k] g^j must vanish.
        Rational acc(0);
        for (Eigen::Index j = 1; j < k; ++j) {
            if (!coeffs[j].is_zero() && !g_pow[j - 1][k].is_zero()) {
                acc += coeffs[j] * g_pow[j - 1][k];
            }
        }
        coeffs[k] = -acc / Rational(int_pow(Int(q), k) - q);
    }
    return QSeries(m, std::move(coeffs));
}

PsiMatrix psi_matrix(std::int64_t q, Eigen::Index n) {
    if (q < 2) {
        throw std::invalid_argument("psi_matrix: q must be >= 2");
    }
    if (n < 1) {
        throw std::invalid_argument("psi_matrix: n must be >= 1");
    }
    const QSeries g = adams_argument(q, n + 1);
    const Rational inv_q = Rational(1) / Rational(q);

    PsiMatrix result;
    result.q = q;
    result.n = n;
    result.entries = RationalMatrix::Constant(n, n, Rational(0));
    QSeries power = g;
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            result.entries(i, j) = inv_q * power[i + 1];
        }
        if (j + 1 < n) {
            power = power * g;
        }
    }
    return result;
}

std::vector<RationalVector> fixed_subspace(std::int64_t q, Eigen::Index n) {
    const PsiMatrix psi = psi_matrix(q, n);
    RationalMatrix shifted = psi.entries;
    for (Eigen::Index i = 0; i < n; ++i) {
        shifted(i, i) -= Rational(1);
    }
    return kernel_basis(shifted);
}

}  // namespace moore
