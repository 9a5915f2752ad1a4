#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moore/obstruction.hpp"
#include "moore/serialize.hpp"

using namespace moore;

namespace {

// Exhaustive order oracle mod m: first t with a^t = 1.
std::int64_t order_oracle(std::int64_t a, std::int64_t m) {
    std::int64_t x = a % m;
    for (std::int64_t t = 1;; ++t) {
        if (x == 1) {
            return t;
        }
        x = (x * a) % m;
    }
}

void check_report_invariants(const ObstructionReport& report) {
    const Int p(report.p);
    const std::int64_t v = padic_valuation(report.c, p).value();
    CHECK(report.first_failure == int_pow(p, v + 1));
    CHECK(report.k == v + 1);
    CHECK(report.n_max == report.first_failure - 1);
    REQUIRE(report.valuations.size() == static_cast<std::size_t>(report.first_failure));
    for (const auto& [i, vi] : report.valuations) {
        if (i < report.first_failure) {
            CHECK(vi >= 0);
        } else {
            CHECK(vi == -1);
        }
    }
}

}  // namespace

TEST_CASE("find_generator examples") {
    CHECK(find_generator(3) == 2);
    CHECK(find_generator(5) == 2);
    // 2 has order 21 mod 49, so 2 fails and 3 is the answer at p = 7.
    CHECK(order_oracle(2, 49) == 21);
    CHECK(order_oracle(3, 49) == 42);
    CHECK(find_generator(7) == 3);
    CHECK(find_generator(11) == 2);
    CHECK(find_generator(13) == 2);
    CHECK_THROWS_AS(find_generator(2), std::invalid_argument);
    CHECK_THROWS_AS(find_generator(9), NotPrimeError);
}

TEST_CASE("found generators have full order mod p^2") {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        const std::int64_t q = find_generator(p);
        CHECK(order_oracle(q, p * p) == p * (p - 1));
    }
}

TEST_CASE("degree_decompose examples") {
    DegreeDecomposition d1 = degree_decompose(3, 2, 2);  // 2^2 - 1 = 3
    CHECK(d1.k == 1);
    CHECK(d1.lambda_residue == 1);

    DegreeDecomposition d2 = degree_decompose(5, 2, 20);  // 2^20 - 1 = 5^2 * 41943
    CHECK(d2.k == 2);
    CHECK(d2.lambda_residue == 41943 % 5);
    CHECK(d2.lambda_residue != 0);

    DegreeDecomposition d3 = degree_decompose(2, 3, 2);  // 3^2 - 1 = 8 = 2^3
    CHECK(d3.k == 3);
    CHECK(d3.lambda_residue == 1);

    CHECK_THROWS_AS(degree_decompose(3, 6, 2), std::invalid_argument);
    CHECK_THROWS_AS(degree_decompose(3, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(degree_decompose(3, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(degree_decompose(4, 3, 2), NotPrimeError);
}

TEST_CASE("generator degree identity") {
    // q^((p-1) p^(k-1)) = 1 + p^k * lambda with lambda prime to p.
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        const std::int64_t q = find_generator(p);
        std::int64_t exponent = p - 1;
        for (std::int64_t k = 1; k <= 6; ++k) {
            DegreeDecomposition d = degree_decompose(p, q, exponent);
            CHECK(d.k == k);
            CHECK(d.lambda_residue != 0);
            exponent *= p;
        }
    }
}

TEST_CASE("p = 2 degree identity") {
    // 3^(2^(k-1)) = 1 + 2^(k+1) * lambda with lambda odd.
    for (std::int64_t k = 2; k <= 10; ++k) {
        DegreeDecomposition d = degree_decompose(2, 3, std::int64_t(1) << (k - 1));
        CHECK(d.k == k + 1);
        CHECK(d.lambda_residue == 1);
    }
}

TEST_CASE("first_failure_index examples") {
    CHECK(first_failure_index(3, Rational(2)) == 3);
    CHECK(first_failure_index(5, Rational(20)) == 25);
    CHECK(first_failure_index(2, Rational(2)) == 4);
    CHECK_THROWS_AS(first_failure_index(3, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(first_failure_index(3, Rational(Int(1), Int(3))), std::invalid_argument);
    CHECK_THROWS_AS(first_failure_index(6, Rational(1)), NotPrimeError);
}

TEST_CASE("first failure is insensitive to the unit lambda") {
    for (std::int64_t p : {3, 5, 7}) {
        for (std::int64_t k = 1; k <= 3; ++k) {
            const Int pk1 = int_pow(Int(p), k - 1);
            for (const Int& lambda : {Int(1), Int(2), Int(p + 1), Int(p) * p - 1}) {
                CHECK(first_failure_index(p, Rational(pk1 * lambda)) == int_pow(Int(p), k));
            }
        }
    }
}

TEST_CASE("an_bound examples") {
    CHECK(an_bound(3, 1).n_max == 2);
    CHECK(an_bound(5, 1).n_max == 4);
    CHECK(an_bound(3, 2).n_max == 8);
    CHECK_THROWS_AS(an_bound(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(an_bound(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(an_bound(15, 1), NotPrimeError);
}

TEST_CASE("an_bound over the desk-scale grid") {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        for (std::int64_t k = 1; k <= 4; ++k) {
            ObstructionReport report = an_bound(p, k);
            CHECK(report.n_max == int_pow(Int(p), k) - 1);
            check_report_invariants(report);
        }
    }
}

TEST_CASE("an_bound_p2 examples") {
    auto [lower2, upper2] = an_bound_p2(2);
    CHECK(lower2.n_max == 3);
    CHECK(upper2.first_failure == 8);
    // Direct valuation scan with c = 2: v_2(2/2) = 0, v_2(2/4) = -1.
    REQUIRE(lower2.valuations.size() == 4);
    CHECK(lower2.valuations[0] == std::pair<std::int64_t, std::int64_t>{1, 1});
    CHECK(lower2.valuations[1] == std::pair<std::int64_t, std::int64_t>{2, 0});
    CHECK(lower2.valuations[2] == std::pair<std::int64_t, std::int64_t>{3, 1});
    CHECK(lower2.valuations[3] == std::pair<std::int64_t, std::int64_t>{4, -1});

    auto [lower3, upper3] = an_bound_p2(3);
    CHECK(lower3.n_max == 7);
    CHECK(upper3.first_failure == 16);

    CHECK_THROWS_AS(an_bound_p2(1), std::invalid_argument);

    for (std::int64_t k = 2; k <= 8; ++k) {
        auto [lower, upper] = an_bound_p2(k);
        check_report_invariants(lower);
        check_report_invariants(upper);
        CHECK(lower.c == Rational(Int(1) << (k - 1)));
        CHECK(upper.c == Rational(Int(1) << k));
    }
}

TEST_CASE("verify_theorem examples") {
    TheoremVerification v31 = verify_theorem(3, 1);
    CHECK(v31.consistent);
    CHECK(v31.report.n_max == 2);
    CHECK_FALSE(v31.upper.has_value());

    TheoremVerification v71 = verify_theorem(7, 1);
    CHECK(v71.consistent);
    CHECK(v71.report.n_max == 6);

    TheoremVerification v33 = verify_theorem(3, 3);
    CHECK(v33.consistent);
    CHECK(v33.report.n_max == 26);

    CHECK_THROWS_AS(verify_theorem(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem(10, 1), NotPrimeError);
}

TEST_CASE("verify_theorem routes agree everywhere tested") {
    for (std::int64_t p : {3, 5, 7}) {
        for (std::int64_t k = 1; k <= 3; ++k) {
            CHECK(verify_theorem(p, k).consistent);
        }
    }
    for (std::int64_t k = 2; k <= 6; ++k) {
        TheoremVerification v = verify_theorem(2, k);
        CHECK(v.consistent);
        CHECK(v.report.n_max == (std::int64_t(1) << k) - 1);
        REQUIRE(v.upper.has_value());
        CHECK(v.upper->first_failure == std::int64_t(1) << (k + 1));
    }
}

TEST_CASE("report serialization") {
    Json doc = to_json(an_bound(3, 1));
    CHECK(doc["p"] == 3);
    CHECK(doc["k"] == 1);
    CHECK(doc["c"] == "2");
    CHECK(doc["c"].is_string());
    CHECK(doc["first_failure"] == 3);
    CHECK(doc["n_max"] == 2);
    CHECK(doc["valuations"] == Json::array({Json::array({1, 0}), Json::array({2, 0}),
                                            Json::array({3, -1})}));
    CHECK(csv_row(an_bound(3, 1)) == "3,1,2,3,2");
}
