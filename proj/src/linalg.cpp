#include "moore/linalg.hpp"

#include <stdexcept>

namespace moore {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

Int lcm_of(const Int& a, const Int& b) {
    return a / gcd(a, b) * b;
}

Int exact_quotient(const Int& num, const Int& den) {
    Int q;
    Int r;
    divide_qr(num, den, q, r);
    if (r != 0) {
        throw std::logic_error("kernel_basis: Bareiss division left a remainder");
    }
    return q;
}

}  // namespace

std::vector<RationalVector> kernel_basis(const RationalMatrix& a) {
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();

    // Scale each row to integers.
    IntMatrix b(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        Int scale = 1;
        for (Eigen::Index j = 0; j < cols; ++j) {
            scale = lcm_of(scale, a(i, j).denominator());
        }
        for (Eigen::Index j = 0; j < cols; ++j) {
            b(i, j) = a(i, j).numerator() * (scale / a(i, j).denominator());
        }
    }

    // Fraction-free row echelon form. prev holds the pivot of the previous
    // step (1 initially); dividing the 2x2 cross terms by it is exact.
    std::vector<Eigen::Index> pivot_col;
    Int prev = 1;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = row; i < rows; ++i) {
            if (b(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        if (pivot != row) {
            b.row(pivot).swap(b.row(row));
        }
        for (Eigen::Index i = row + 1; i < rows; ++i) {
            for (Eigen::Index j = col + 1; j < cols; ++j) {
                b(i, j) = exact_quotient(b(row, col) * b(i, j) - b(i, col) * b(row, j), prev);
            }
            b(i, col) = 0;
        }
        prev = b(row, col);
        pivot_col.push_back(col);
        ++row;
    }
    const Eigen::Index rank = static_cast<Eigen::Index>(pivot_col.size());

    // Back-substitute once per free column.
    std::vector<RationalVector> basis;
    for (Eigen::Index free = 0, next_pivot = 0; free < cols; ++free) {
        if (next_pivot < rank && pivot_col[next_pivot] == free) {
            ++next_pivot;
            continue;
        }
        RationalVector v = RationalVector::Constant(cols, Rational(0));
        v[free] = Rational(1);
        for (Eigen::Index t = rank - 1; t >= 0; --t) {
            const Eigen::Index pc = pivot_col[t];
            if (pc > free) {
                continue;
            }
            Rational acc(0);
            for (Eigen::Index j = pc + 1; j <= free; ++j) {
                if (!v[j].is_zero() && b(t, j) != 0) {
                    acc += Rational(b(t, j)) * v[j];
                }
            }
            v[pc] = -acc / Rational(b(t, pc));
        }
        // Normalize: first nonzero coordinate becomes 1.
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (!v[j].is_zero()) {
                Rational lead = v[j];
                for (Eigen::Index s = j; s < cols; ++s) {
                    v[s] /= lead;
                }
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace moore
