#include "moore/trunc_series.hpp"

namespace moore {

QSeries log_series(Eigen::Index m) {
    if (m < 1) {
        throw std::invalid_argument("log_series: modulus must be >= 1");
    }
    QSeries::CoeffVector coeffs = QSeries::CoeffVector::Constant(m, Rational(0));
    for (Eigen::Index i = 1; i < m; ++i) {
        coeffs[i] = Rational(Int(i % 2 == 1 ? 1 : -1), Int(i));
    }
    return QSeries(m, std::move(coeffs));
}

QSeries adams_argument(std::int64_t q, Eigen::Index m) {
    if (q < 1) {
        throw std::invalid_argument("adams_argument: q must be >= 1");
    }
    if (m < 1) {
        throw std::invalid_argument("adams_argument: modulus must be >= 1");
    }
    QSeries::CoeffVector coeffs = QSeries::CoeffVector::Constant(m, Rational(0));
    const Eigen::Index top = std::min<Eigen::Index>(q, m - 1);
    for (Eigen::Index i = 1; i <= top; ++i) {
        coeffs[i] = Rational(binomial(Int(q), i));
    }
    return QSeries(m, std::move(coeffs));
}

std::string terms_string(const QSeries& f) {
    std::string out;
    for (Eigen::Index i = 0; i < f.modulus(); ++i) {
        const Rational& c = f[i];
        if (c.is_zero()) {
            continue;
        }
        const Rational mag = abs(c);
        if (out.empty()) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        std::string power = i == 1 ? "x" : "x^" + std::to_string(i);
        if (mag == Rational(1)) {
            out += power;
        } else {
            out += mag.to_string() + "*" + power;
        }
    }
    return out.empty() ? "0" : out;
}

std::string to_string(const QSeries& f) {
    return terms_string(f) + " mod x^" + std::to_string(f.modulus());
}

}  // namespace moore
