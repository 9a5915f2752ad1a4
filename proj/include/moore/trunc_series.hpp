#pragma once

#include "moore/eigen_support.hpp"
#include "moore/number_theory.hpp"
#include "moore/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace moore {

/// Truncated formal power series: an element of R[[x]]/(x^m) stored as a
/// dense coefficient vector of length exactly m, index i holding the
/// coefficient of x^i. The truncation modulus travels with the value and
/// every binary operation insists that both operands share it.
template <typename Scalar>
class TruncSeries {
public:
    using CoeffVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    /// The zero series mod x^m, m >= 1.
    explicit TruncSeries(Eigen::Index modulus)
        : coeffs_(CoeffVector::Constant(checked(modulus), Scalar(0))) {}

    TruncSeries(Eigen::Index modulus, CoeffVector coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != checked(modulus)) {
            throw std::invalid_argument("TruncSeries: coefficient count must equal the modulus");
        }
    }

    static TruncSeries constant(Eigen::Index modulus, Scalar value) {
        TruncSeries s(modulus);
        s.coeffs_[0] = std::move(value);
        return s;
    }

    /// c * x^degree mod x^m (zero if degree >= m).
    static TruncSeries monomial(Eigen::Index modulus, Eigen::Index degree,
                                Scalar c = Scalar(1)) {
        TruncSeries s(modulus);
        if (degree >= 0 && degree < modulus) {
            s.coeffs_[degree] = std::move(c);
        }
        return s;
    }

    Eigen::Index modulus() const { return coeffs_.size(); }
    const CoeffVector& coeffs() const { return coeffs_; }
    const Scalar& operator[](Eigen::Index i) const { return coeffs_[i]; }

    bool is_zero() const {
        for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
            if (!(coeffs_[i] == Scalar(0))) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        if (a.modulus() != b.modulus()) {
            return false;
        }
        for (Eigen::Index i = 0; i < a.modulus(); ++i) {
            if (!(a.coeffs_[i] == b.coeffs_[i])) {
                return false;
            }
        }
        return true;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        require_same_modulus(a, b);
        return TruncSeries(a.modulus(), CoeffVector(a.coeffs_ + b.coeffs_));
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        require_same_modulus(a, b);
        return TruncSeries(a.modulus(), CoeffVector(a.coeffs_ - b.coeffs_));
    }

    friend TruncSeries operator-(const TruncSeries& a) {
        return TruncSeries(a.modulus(), CoeffVector(-a.coeffs_));
    }

    /// Cauchy product truncated at x^m.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        require_same_modulus(a, b);
        const Eigen::Index m = a.modulus();
        TruncSeries out(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            if (a.coeffs_[i] == Scalar(0)) {
                continue;
            }
            for (Eigen::Index j = 0; i + j < m; ++j) {
                if (b.coeffs_[j] == Scalar(0)) {
                    continue;
                }
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    /// Coefficient-wise scalar multiple.
    friend TruncSeries operator*(const Scalar& c, const TruncSeries& f) {
        return TruncSeries(f.modulus(), CoeffVector(f.coeffs_ * c));
    }

private:
    static Eigen::Index checked(Eigen::Index modulus) {
        if (modulus < 1) {
            throw std::invalid_argument("TruncSeries: modulus must be >= 1");
        }
        return modulus;
    }

    static void require_same_modulus(const TruncSeries& a, const TruncSeries& b) {
        if (a.modulus() != b.modulus()) {
            throw std::invalid_argument("TruncSeries: modulus mismatch");
        }
    }

    CoeffVector coeffs_;
};

template <typename Scalar>
TruncSeries<Scalar> scale(const Scalar& c, const TruncSeries<Scalar>& f) {
    return c * f;
}

/// f(g(x)) mod x^m by Horner's rule over the truncated ring. g must have
/// zero constant term for the substitution to be well defined mod x^m.
template <typename Scalar>
TruncSeries<Scalar> compose(const TruncSeries<Scalar>& f, const TruncSeries<Scalar>& g) {
    if (f.modulus() != g.modulus()) {
        throw std::invalid_argument("compose: modulus mismatch");
    }
    if (!(g[0] == Scalar(0))) {
        throw std::invalid_argument("compose: inner series must have zero constant term");
    }
    const Eigen::Index m = f.modulus();
    TruncSeries<Scalar> result = TruncSeries<Scalar>::constant(m, f[m - 1]);
    for (Eigen::Index i = m - 2; i >= 0; --i) {
        result = result * g + TruncSeries<Scalar>::constant(m, f[i]);
    }
    return result;
}

/// Series over the exact rationals; the instantiation everything downstream
/// computes with.
using QSeries = TruncSeries<Rational>;

/// Truncated logarithm: sum_{i=1}^{m-1} (-1)^{i+1} x^i / i.
QSeries log_series(Eigen::Index m);

/// (1+x)^q - 1 mod x^m, built from binomial coefficients. Requires q >= 1.
QSeries adams_argument(std::int64_t q, Eigen::Index m);

/// Rendering of the nonzero terms, e.g. "x - 1/2*x^2 + 1/3*x^3"; "0" when
/// the series vanishes.
std::string terms_string(const QSeries& f);

/// Full annotated form, e.g. "x - 1/2*x^2 mod x^3".
std::string to_string(const QSeries& f);

}  // namespace moore
