#include <catch2/catch.hpp>

#include <random>

#include "supercon/congruence.hpp"
#include "supercon/number_theory.hpp"
#include "supercon/rational.hpp"

using namespace supercon;

namespace {

// Test-side generator with a fixed seed so failures reproduce.
std::mt19937& rng() {
    static std::mt19937 gen(20240517);
    return gen;
}

Rational random_nonzero_rational(long magnitude = 999) {
    std::uniform_int_distribution<long> dist(-magnitude, magnitude);
    long num = 0;
    while (num == 0) num = dist(rng());
    long den = 0;
    while (den == 0) den = dist(rng());
    return Rational(num, den);
}

}  // namespace

TEST_CASE("canonical form") {
    REQUIRE(Rational(2, 4) == Rational(1, 2));
    REQUIRE(Rational(-2, -4) == Rational(1, 2));
    REQUIRE(Rational(2, -4) == Rational(-1, 2));
    REQUIRE(Rational(0, 7) == Rational(0));
    REQUIRE(Rational(0, -7).denominator() == 1);
    REQUIRE(Rational(-3, 9).denominator() == 3);
    REQUIRE(Rational(-3, 9).numerator() == -1);
    REQUIRE(Rational(7, 3).to_string() == "7/3");
    REQUIRE(Rational(-14, 2).to_string() == "-7");
    REQUIRE_THROWS_AS(Rational(1, 0), std::domain_error);
    REQUIRE_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("product of reciprocals is exactly 1") {
    for (int trial = 0; trial < 200; ++trial) {
        Rational a = random_nonzero_rational();
        Rational b = random_nonzero_rational();
        Rational prod = (a / b) * (b / a);
        REQUIRE(prod == Rational(1));
        REQUIRE(prod.denominator() == 1);
    }
}

TEST_CASE("p-adic valuation basics") {
    Valuation v = padic_valuation(Rational(100, 7), 5);
    REQUIRE_FALSE(v.infinite);
    REQUIRE(v.value == 2);

    // 1125/32 = 9*5^3 / 32; this is v5((3/4)_5 - 3(1/4)_5)
    v = padic_valuation(Rational(1125, 32), 5);
    REQUIRE(v.value == 3);

    v = padic_valuation(Rational(0), 7);
    REQUIRE(v.infinite);
    REQUIRE(v.at_least(1000));

    REQUIRE(padic_valuation(Rational(1, 125), 5).value == -3);
    REQUIRE_THROWS_AS(padic_valuation(Rational(1), 6), std::invalid_argument);
}

TEST_CASE("valuation additivity and ultrametric inequality") {
    auto primes = prime_stream(100, 1, 0);
    primes.insert(primes.begin(), {2ul, 3ul});
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    std::uniform_int_distribution<int> small_pow(0, 4);

    for (int trial = 0; trial < 400; ++trial) {
        unsigned long p = primes[pick(rng())];
        // Salt the random rationals with explicit powers of p so valuations
        // actually vary.
        Rational x = random_nonzero_rational() *
                     Rational::pow(Rational(static_cast<long>(p)), small_pow(rng()));
        Rational y = random_nonzero_rational() /
                     Rational::pow(Rational(static_cast<long>(p)), small_pow(rng()));

        Valuation vx = padic_valuation(x, p);
        Valuation vy = padic_valuation(y, p);
        REQUIRE(padic_valuation(x * y, p).value == vx.value + vy.value);

        Valuation vsum = padic_valuation(x + y, p);
        long lower = std::min(vx.value, vy.value);
        REQUIRE(vsum.at_least(lower));
        if (vx.value != vy.value) {
            REQUIRE_FALSE(vsum.infinite);
            REQUIRE(vsum.value == lower);
        }
    }
}

TEST_CASE("congruent_mod") {
    SECTION("integer instance of the binomial congruence") {
        CongruenceResult res = congruent_mod(Rational(252), Rational(2), 5, 3);
        REQUIRE(res.holds);
        REQUIRE(res.valuation.value == 3);
    }
    SECTION("rational instance: truncated products at p = 5") {
        CongruenceResult res =
            congruent_mod(Rational(4389, 256), Rational(1989, 256), 5, 2);
        REQUIRE(res.holds);
        REQUIRE(res.valuation.value == 2);
    }
    SECTION("reflexivity gives the infinite valuation") {
        CongruenceResult res = congruent_mod(Rational(7, 3), Rational(7, 3), 11, 2);
        REQUIRE(res.holds);
        REQUIRE(res.valuation.infinite);
    }
    SECTION("negative valuation reported, verdict false") {
        CongruenceResult res = congruent_mod(Rational(1, 5), Rational(0), 5, 1);
        REQUIRE_FALSE(res.holds);
        REQUIRE(res.valuation.value == -1);
    }
    SECTION("claim guards") {
        REQUIRE_THROWS_AS(CongruenceClaim(Rational(1), Rational(1), 3, 1),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(CongruenceClaim(Rational(1), Rational(1), 2, 1),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(CongruenceClaim(Rational(1), Rational(1), 9, 1),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(CongruenceClaim(Rational(1), Rational(1), 5, 0),
                          std::invalid_argument);
        REQUIRE_NOTHROW(CongruenceClaim(Rational(1), Rational(1), 5, 7));
    }
}

TEST_CASE("congruence is an equivalence relation on p-integral rationals") {
    const unsigned long p = 7;
    const long r = 2;
    std::uniform_int_distribution<long> dist(-500, 500);
    auto p_integral = [&]() {
        long den = 0;
        while (den == 0 || den % static_cast<long>(p) == 0) den = dist(rng());
        return Rational(dist(rng()), den);
    };
    for (int trial = 0; trial < 100; ++trial) {
        Rational a = p_integral(), b = p_integral(), c = p_integral();
        REQUIRE(congruent_mod(a, a, p, r).holds);
        REQUIRE(congruent_mod(a, b, p, r).holds == congruent_mod(b, a, p, r).holds);
        if (congruent_mod(a, b, p, r).holds && congruent_mod(b, c, p, r).holds)
            REQUIRE(congruent_mod(a, c, p, r).holds);
        // Force some equivalent pairs to make transitivity non-vacuous.
        Rational shift = Rational(static_cast<long>(p * p)) * p_integral();
        REQUIRE(congruent_mod(a, a + shift, p, r).holds);
        REQUIRE(congruent_mod(a + shift, a + shift + shift, p, r).holds);
        REQUIRE(congruent_mod(a, a + shift + shift, p, r).holds);
    }
}

TEST_CASE("rising factorial") {
    REQUIRE(rising_factorial(Rational(1, 4), 0) == Rational(1));
    REQUIRE(rising_factorial(Rational(1, 4), 2) == Rational(5, 16));
    REQUIRE(rising_factorial(Rational(3, 4), 5) == Rational(65835, 1024));
    // (1)_n = n!
    REQUIRE(rising_factorial(Rational(1), 6) == Rational(720));
}

TEST_CASE("rising factorial splitting law") {
    std::uniform_int_distribution<unsigned long> len(0, 50);
    for (int trial = 0; trial < 50; ++trial) {
        Rational a = random_nonzero_rational(40);
        unsigned long m = len(rng()), n = len(rng());
        Rational lhs = rising_factorial(a, m + n);
        Rational rhs = rising_factorial(a, m) *
                       rising_factorial(a + Rational(static_cast<long>(m)), n);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("binomial coefficients") {
    REQUIRE(binomial(4, 2) == 6);
    REQUIRE(binomial(5, 7) == 0);
    REQUIRE(binomial(0, 0) == 1);

    // factorial-formula oracle, computed with plain integer loops
    auto fact = [](unsigned long n) {
        mpz_class f = 1;
        for (unsigned long k = 2; k <= n; ++k) f *= k;
        return f;
    };
    REQUIRE(binomial(10, 5) == fact(10) / (fact(5) * fact(5)));
    REQUIRE(binomial(10, 5) == 252);
    for (unsigned long n = 0; n <= 24; ++n)
        for (unsigned long k = 0; k <= n; ++k)
            REQUIRE(binomial(n, k) == fact(n) / (fact(k) * fact(n - k)));
}

TEST_CASE("mod_inverse") {
    REQUIRE(mod_inverse(2, 7) == 4);
    REQUIRE(mod_inverse(16, 7) == 4);
    REQUIRE(mod_inverse(1, 5) == 1);
    REQUIRE_THROWS_AS(mod_inverse(7, 7), std::invalid_argument);
    REQUIRE_THROWS_AS(mod_inverse(14, 7), std::invalid_argument);
    for (unsigned long a = 1; a < 13; ++a)
        REQUIRE((a * mod_inverse(a, 13)) % 13 == 1);
}

TEST_CASE("harmonic numbers") {
    REQUIRE(harmonic(0) == Rational(0));
    REQUIRE(harmonic(4) == Rational(25, 12));
    REQUIRE(harmonic(6) == Rational(49, 20));
}

TEST_CASE("fermat quotients") {
    REQUIRE(fermat_quotient(mpz_class(2), 7) == Rational(9));
    REQUIRE(fermat_quotient(mpz_class(1), 13) == Rational(0));
    REQUIRE(fermat_quotient(mpz_class(2), 5) == Rational(3));
    REQUIRE(fermat_quotient(mpz_class(3), 7).is_integer());
    REQUIRE_THROWS_AS(fermat_quotient(mpz_class(14), 7), std::invalid_argument);
}

TEST_CASE("prime predicate") {
    REQUIRE(is_prime(2));
    REQUIRE(is_prime(97));
    REQUIRE(is_prime(101));
    REQUIRE_FALSE(is_prime(1));
    REQUIRE_FALSE(is_prime(91));  // 7 * 13
}
