#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diopell/arith.hpp"

using namespace diopell;

namespace {

// Independent oracle: trial division, nothing shared with the library path.
bool trial_division_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

Natural random_natural(std::mt19937_64& rng, unsigned words) {
    Natural n = 0;
    for (unsigned i = 0; i < words; ++i) {
        n <<= 64;
        n += Natural(rng());
    }
    return n;
}

}  // namespace

TEST_CASE("isqrt examples") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(24) == 4);

    // oracle: exact multiplication
    Natural big("9653280");
    Natural square = big * big;
    CHECK(square == Natural("93185814758400"));
    CHECK(isqrt(square) == big);
    CHECK(isqrt(square - 1) == big - 1);
    CHECK(isqrt(square + 1) == big);
}

TEST_CASE("isqrt bracketing holds exhaustively below 10^6") {
    for (unsigned long n = 0; n <= 1000000; ++n) {
        Natural r = isqrt(Natural(n));
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("is_perfect_square examples") {
    REQUIRE(is_perfect_square(441).has_value());
    CHECK(*is_perfect_square(441) == 21);
    CHECK_FALSE(is_perfect_square(24).has_value());
    REQUIRE(is_perfect_square(1).has_value());
    CHECK(*is_perfect_square(1) == 1);
    CHECK(*is_perfect_square(0) == 0);
}

TEST_CASE("is_perfect_square on random 128-bit values") {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 2000; ++i) {
        Natural n = random_natural(rng, 2);
        auto root = is_perfect_square(n * n);
        REQUIRE(root.has_value());
        CHECK(*root == n);
        if (n >= 1) CHECK_FALSE(is_perfect_square(n * n + 1).has_value());
    }
}

TEST_CASE("iroot and perfect powers") {
    CHECK(iroot(0, 3) == 0);
    CHECK(iroot(1, 7) == 1);
    CHECK(iroot(26, 3) == 2);
    CHECK(iroot(27, 3) == 3);
    CHECK(iroot(28, 3) == 3);
    CHECK(iroot(Natural("1000000000000000000000000"), 4) == 1000000);
    CHECK(iroot(Natural("999999999999999999999999"), 4) == 999999);

    CHECK(*is_perfect_power(Natural("12167"), 3) == 23);
    CHECK_FALSE(is_perfect_power(Natural("12168"), 3).has_value());

    // bracketing against brute force for small cases
    for (unsigned long n = 0; n <= 3000; ++n) {
        for (unsigned k = 2; k <= 5; ++k) {
            Natural r = iroot(Natural(n), k);
            Natural rk, r1k;
            mpz_pow_ui(rk.get_mpz_t(), r.get_mpz_t(), k);
            mpz_pow_ui(r1k.get_mpz_t(), Natural(r + 1).get_mpz_t(), k);
            CHECK(rk <= n);
            CHECK(r1k > n);
        }
    }
}

TEST_CASE("is_prime examples") {
    CHECK(is_prime(239));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(6083));  // 7 * 11 * 79
    CHECK(is_prime(2));
    CHECK(is_prime(Natural("2305843009213693951")));  // 2^61 - 1
}

TEST_CASE("is_prime agrees with trial division below 10^6") {
    for (unsigned long n = 0; n <= 1000000; ++n)
        CHECK(is_prime(Natural(n)) == trial_division_prime(n));
}

TEST_CASE("is_prime beyond 64 bits") {
    Natural m89 = (Natural(1) << 89) - 1;
    CHECK(is_prime(m89));

    // Cole's factorization of 2^67 - 1; the product is re-checked here, so
    // the compositeness assertion is self-verifying.
    Natural m67 = (Natural(1) << 67) - 1;
    REQUIRE(Natural("193707721") * Natural("761838257287") == m67);
    CHECK_FALSE(is_prime(m67));

    // strong pseudoprime to bases 2..31, caught by 37
    Natural tricky("3825123056546413051");
    REQUIRE(Natural("149491") * Natural("747451") * Natural("34233211") == tricky);
    CHECK_FALSE(is_prime(tricky));

    // square of a large prime
    CHECK_FALSE(is_prime(m89 * m89));
}

TEST_CASE("factorize examples") {
    auto f = factorize(6083);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0].prime == 7);
    CHECK(f.factors[1].prime == 11);
    CHECK(f.factors[2].prime == 79);
    for (const auto& pp : f.factors) CHECK(pp.exponent == 1);

    auto g = factorize(28560);  // 13^4 - 1
    REQUIRE(g.factors.size() == 5);
    CHECK(g.factors[0].prime == 2);
    CHECK(g.factors[0].exponent == 4);
    CHECK(g.factors[1].prime == 3);
    CHECK(g.factors[2].prime == 5);
    CHECK(g.factors[3].prime == 7);
    CHECK(g.factors[4].prime == 17);

    auto h = factorize(2);
    REQUIRE(h.factors.size() == 1);
    CHECK(h.factors[0].prime == 2);
    CHECK(h.factors[0].exponent == 1);

    CHECK_THROWS_AS(factorize(1), std::domain_error);
    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize round-trips exhaustively on 2..10^5") {
    for (unsigned long n = 2; n <= 100000; ++n) {
        auto f = factorize(Natural(n));
        CHECK(f.value() == n);
        for (size_t i = 1; i < f.factors.size(); ++i)
            CHECK(f.factors[i - 1].prime < f.factors[i].prime);
    }
}

TEST_CASE("factorize round-trips on random 64-bit values") {
    std::mt19937_64 rng(987654321);
    for (int i = 0; i < 100; ++i) {
        Natural n = Natural(rng());
        if (n < 2) continue;
        auto f = factorize(n);
        CHECK(f.value() == n);
        for (const auto& pp : f.factors) CHECK(is_prime(pp.prime));
    }
}

TEST_CASE("factorize splits a perfect power with a large base") {
    Natural p("1000003");
    auto f = factorize(p * p * p);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].prime == p);
    CHECK(f.factors[0].exponent == 3);
}

TEST_CASE("squarefree decomposition") {
    auto s = squarefree_decompose(8);
    CHECK(s.d == 2);
    CHECK(s.w == 2);

    auto t = squarefree_decompose(6083);
    CHECK(t.d == 6083);
    CHECK(t.w == 1);

    auto u = squarefree_decompose(288);
    CHECK(u.d == 2);
    CHECK(u.w == 12);

    auto one = squarefree_decompose(1);
    CHECK(one.d == 1);
    CHECK(one.w == 1);

    CHECK_THROWS_AS(squarefree_decompose(0), std::domain_error);
}

TEST_CASE("squarefree decomposition cross-checked against factorize up to 10^4") {
    for (unsigned long n = 1; n <= 10000; ++n) {
        auto s = squarefree_decompose(Natural(n));
        CHECK(s.d * s.w * s.w == n);
        if (s.d >= 2) {
            for (const auto& pp : factorize(s.d).factors) CHECK(pp.exponent == 1);
        }
    }
}
