#pragma once

#include "moore/number_theory.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace moore {

/// Exact rational number, always kept in canonical form:
/// denominator > 0, gcd(|numerator|, denominator) = 1, zero stored as 0/1.
/// Values are immutable in spirit: every operation builds a new canonical
/// value, so Rationals can be shared freely across threads.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}                 // NOLINT: implicit by design
    Rational(std::int64_t v) : num_(v), den_(1) {}        // NOLINT
    Rational(Int v) : num_(std::move(v)), den_(1) {}      // NOLINT
    Rational(Int num, Int den);

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Exact decimal form "num/den", with "/1" omitted.
    std::string to_string() const;

    /// Parses "num", "-num" or "num/den"; rejects anything else.
    static Rational from_string(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    struct canonical_tag {};
    Rational(canonical_tag, Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {}

    Int num_;
    Int den_;
};

Rational abs(const Rational& r);

/// r^exp; negative exponents invert, 0^negative is a domain error.
Rational pow(const Rational& r, std::int64_t exp);

/// p-adic valuation: an integer, or infinity exactly for the value zero
/// (so zero series coefficients count as p-integral). Totally ordered with
/// infinity above every finite value.
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation finite(std::int64_t v) { return Valuation(false, v); }

    bool is_infinite() const { return infinite_; }

    /// Finite value; calling this on infinity is a logic error.
    std::int64_t value() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

    friend std::ostream& operator<<(std::ostream& os, const Valuation& v);

private:
    Valuation(bool infinite, std::int64_t v) : infinite_(infinite), value_(v) {}

    bool infinite_;
    std::int64_t value_;
};

/// v_p(r) = v_p(numerator) - v_p(denominator); infinity iff r = 0.
/// p must be prime (NotPrimeError otherwise).
Valuation padic_valuation(const Rational& r, const Int& p);

/// True iff v_p(r) >= 0, i.e. r lies in Z_(p).
bool is_p_integral(const Rational& r, const Int& p);

}  // namespace moore
