#include "moore/number_theory.hpp"

#include <boost/multiprecision/integer.hpp>

#include <array>

namespace moore {

namespace {

// Largest input for which the fixed witness set below is known to be
// deterministic (Sorenson-Webster): 3,317,044,064,679,887,385,961,981.
const Int kMillerRabinBound("3317044064679887385961981");

constexpr std::array<int, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// True if a proves n composite.
bool witness_composite(const Int& n, const Int& a, const Int& d, int r) {
    Int x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) {
        return false;
    }
    for (int i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n >= kMillerRabinBound) {
        throw std::invalid_argument("is_prime: input exceeds the deterministic witness range");
    }
    if (n < 2) {
        return false;
    }
    for (int w : kWitnesses) {
        if (n == w) {
            return true;
        }
        if (n % w == 0) {
            return false;
        }
    }
    // n is odd here; write n - 1 = d * 2^r.
    Int d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (int w : kWitnesses) {
        if (witness_composite(n, Int(w), d, r)) {
            return false;
        }
    }
    return true;
}

Int pow_mod(const Int& base, const Int& exp, const Int& m) {
    if (m < 1) {
        throw std::invalid_argument("pow_mod: modulus must be >= 1");
    }
    if (exp < 0) {
        throw std::invalid_argument("pow_mod: negative exponent");
    }
    if (m == 1) {
        return 0;
    }
    Int b = base % m;
    if (b < 0) {
        b += m;
    }
    return boost::multiprecision::powm(b, exp, m);
}

Int int_pow(const Int& base, std::int64_t exp) {
    if (exp < 0) {
        throw std::invalid_argument("int_pow: negative exponent");
    }
    Int result = 1;
    Int b = base;
    std::int64_t e = exp;
    while (e > 0) {
        if (e & 1) {
            result *= b;
        }
        e >>= 1;
        if (e > 0) {
            b *= b;
        }
    }
    return result;
}

std::vector<std::pair<Int, int>> factorize(const Int& n) {
    if (n < 1 || n > Int(1000000000000LL)) {
        throw std::invalid_argument("factorize: input out of supported range [1, 10^12]");
    }
    std::vector<std::pair<Int, int>> factors;
    Int rest = n;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) {
            factors.emplace_back(p, e);
        }
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= rest; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (rest > 1) {
        factors.emplace_back(rest, 1);
    }
    return factors;
}

Int totient(const Int& n) {
    Int phi = 1;
    for (const auto& [p, e] : factorize(n)) {
        phi *= int_pow(p, e - 1) * (p - 1);
    }
    return phi;
}

Int multiplicative_order(const Int& a, const Int& m) {
    if (m < 2) {
        throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
    }
    Int b = a % m;
    if (b < 0) {
        b += m;
    }
    if (gcd(b, m) != 1) {
        throw std::invalid_argument("multiplicative_order: base not coprime to modulus");
    }
    Int t = totient(m);
    for (const auto& [p, e] : factorize(t)) {
        (void)e;
        while (t % p == 0 && pow_mod(b, t / p, m) == 1) {
            t /= p;
        }
    }
    return t;
}

Int binomial(const Int& n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Int c = 1;
    for (std::int64_t j = 1; j <= k; ++j) {
        c *= n - j + 1;
        c /= j;
    }
    return c;
}

}  // namespace moore
