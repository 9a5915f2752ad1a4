#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace moore {

/// Exact integer of unbounded magnitude.
using Int = boost::multiprecision::cpp_int;

/// Thrown when an argument that must be prime is not. Kept distinct from
/// plain std::invalid_argument so callers can tell a bad modulus from a
/// bad prime.
struct NotPrimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Deterministic Miller-Rabin primality test. The fixed witness set
/// {2, 3, 5, 7, ..., 37} decides primality correctly for all
/// n < 3.317e24; larger inputs are rejected with std::invalid_argument
/// rather than answered probabilistically.
bool is_prime(const Int& n);

/// base^exp mod m, m >= 1.
Int pow_mod(const Int& base, const Int& exp, const Int& m);

/// base^exp over the integers, exp >= 0.
Int int_pow(const Int& base, std::int64_t exp);

/// Prime factorization by trial division, returned as (prime, exponent)
/// pairs in increasing prime order. Requires 1 <= n <= 10^12.
std::vector<std::pair<Int, int>> factorize(const Int& n);

/// Euler's totient of n >= 1.
Int totient(const Int& n);

/// Smallest t >= 1 with a^t = 1 mod m. Requires m >= 2 and gcd(a, m) = 1;
/// computed by factoring phi(m) and descending through its divisors.
Int multiplicative_order(const Int& a, const Int& m);

/// Binomial coefficient C(n, k) by the multiplicative recurrence
/// C(n, k) = C(n, k-1) * (n-k+1) / k; every intermediate division is exact.
Int binomial(const Int& n, std::int64_t k);

}  // namespace moore
