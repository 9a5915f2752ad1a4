#include "moore/rational.hpp"

#include <ostream>
#include <sstream>

namespace moore {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = gcd(abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    return Rational(canonical_tag{}, -num_, den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) {
        return Rational(Rational::canonical_tag{}, a.num_ + b.num_, Int(1));
    }
    // Knuth 4.5.1: with d1 = gcd(den_a, den_b) the only reduction left in
    // the sum is by gcd(t, d1).
    Int d1 = gcd(a.den_, b.den_);
    if (d1 == 1) {
        return Rational(Rational::canonical_tag{}, a.num_ * b.den_ + b.num_ * a.den_,
                        a.den_ * b.den_);
    }
    Int t = a.num_ * (b.den_ / d1) + b.num_ * (a.den_ / d1);
    if (t == 0) {
        return Rational();
    }
    Int d2 = gcd(abs(t), d1);
    return Rational(Rational::canonical_tag{}, t / d2, (a.den_ / d1) * (b.den_ / d2));
}

Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
}

Rational operator*(const Rational& a, const Rational& b) {
    if (a.num_ == 0 || b.num_ == 0) {
        return Rational();
    }
    Int g1 = gcd(abs(a.num_), b.den_);
    Int g2 = gcd(abs(b.num_), a.den_);
    return Rational(Rational::canonical_tag{}, (a.num_ / g1) * (b.num_ / g2),
                    (a.den_ / g2) * (b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) {
        throw std::domain_error("Rational: division by zero");
    }
    if (a.num_ == 0) {
        return Rational();
    }
    Int g1 = gcd(abs(a.num_), abs(b.num_));
    Int g2 = gcd(abs(b.den_), a.den_);
    Int num = (a.num_ / g1) * (b.den_ / g2);
    Int den = (a.den_ / g2) * (abs(b.num_) / g1);
    if (b.num_ < 0) {
        num = -num;
    }
    return Rational(Rational::canonical_tag{}, std::move(num), std::move(den));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    Int lhs = a.numerator() * b.denominator();
    Int rhs = b.numerator() * a.denominator();
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += "/" + den_.str();
    }
    return s;
}

Rational Rational::from_string(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Int(std::string(text)));
        }
        Int num{std::string(text.substr(0, slash))};
        Int den{std::string(text.substr(slash + 1))};
        return Rational(std::move(num), std::move(den));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("Rational::from_string: malformed rational '" +
                                    std::string(text) + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& r, std::int64_t exp) {
    if (exp == 0) {
        return Rational(1);
    }
    if (exp < 0) {
        if (r.is_zero()) {
            throw std::domain_error("pow: zero to a negative power");
        }
        return pow(Rational(1) / r, -exp);
    }
    return Rational(int_pow(r.numerator(), exp), int_pow(r.denominator(), exp));
}

std::int64_t Valuation::value() const {
    if (infinite_) {
        throw std::logic_error("Valuation: infinity has no finite value");
    }
    return value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ && b.infinite_) {
        return std::strong_ordering::equal;
    }
    if (a.infinite_) {
        return std::strong_ordering::greater;
    }
    if (b.infinite_) {
        return std::strong_ordering::less;
    }
    return a.value_ <=> b.value_;
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    if (v.is_infinite()) {
        return os << "infinity";
    }
    return os << v.value();
}

namespace {

std::int64_t count_factors(Int n, const Int& p) {
    std::int64_t count = 0;
    Int q;
    Int r;
    while (n != 0) {
        divide_qr(n, p, q, r);
        if (r != 0) {
            break;
        }
        n = q;
        ++count;
    }
    return count;
}

}  // namespace

Valuation padic_valuation(const Rational& r, const Int& p) {
    if (!is_prime(p)) {
        throw NotPrimeError("padic_valuation: p = " + p.str() + " is not prime");
    }
    if (r.is_zero()) {
        return Valuation::infinity();
    }
    return Valuation::finite(count_factors(abs(r.numerator()), p) -
                             count_factors(r.denominator(), p));
}

bool is_p_integral(const Rational& r, const Int& p) {
    Valuation v = padic_valuation(r, p);
    return v.is_infinite() || v.value() >= 0;
}

}  // namespace moore
