#include <catch2/catch.hpp>

#include <sstream>

#include "supercon/number_theory.hpp"
#include "supercon/sequences.hpp"

using namespace supercon;

namespace {

// Independent integer-product routes, following
//   s_n = 4^n / (n!)^2 * prod (1+4i)^2
//   t_n = 6^n / (n!)^2 * prod (1+6i)(1+3i)
// rather than the Pochhammer forms used by the library.
Rational s_integer_products(unsigned long n) {
    mpz_class num = 1;
    for (unsigned long i = 0; i < n; ++i) {
        mpz_class f = 1 + 4 * i;
        num *= f * f;
    }
    mpz_class four_n;
    mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
    return Rational(four_n * num, factorial(n) * factorial(n));
}

Rational t_integer_products(unsigned long n) {
    mpz_class num = 1;
    for (unsigned long i = 0; i < n; ++i) num *= mpz_class(1 + 6 * i) * mpz_class(1 + 3 * i);
    mpz_class six_n;
    mpz_ui_pow_ui(six_n.get_mpz_t(), 6, n);
    return Rational(six_n * num, factorial(n) * factorial(n));
}

}  // namespace

TEST_CASE("apery numbers") {
    REQUIRE(apery(0) == Rational(1));
    REQUIRE(apery(1) == Rational(5));
    REQUIRE(apery(2) == Rational(73));
    REQUIRE(apery(3) == Rational(1445));
    REQUIRE(apery(4) == Rational(33001));
    REQUIRE(apery(5) == Rational(819005));
}

TEST_CASE("domb numbers") {
    REQUIRE(domb(0) == Rational(1));
    REQUIRE(domb(1) == Rational(-4));
    REQUIRE(domb(2) == Rational(28));
    REQUIRE(domb(3) == Rational(-256));
    REQUIRE(domb(4) == Rational(2716));
}

TEST_CASE("s closed form and recurrence") {
    REQUIRE(s_closed(0) == Rational(1));
    REQUIRE(s_closed(1) == Rational(4));
    REQUIRE(s_closed(2) == Rational(100));
    REQUIRE(s_closed(5) == Rational(7033104));

    SECTION("agrees with the integer-product route") {
        for (unsigned long n = 0; n <= 60; ++n) REQUIRE(s_closed(n) == s_integer_products(n));
    }
    SECTION("one-step ratio") {
        Rational cur(1);
        for (unsigned long n = 0; n < 40; ++n) {
            cur = s_next(n, cur);
            REQUIRE(cur == s_closed(n + 1));
        }
    }
}

TEST_CASE("t closed form and recurrence") {
    REQUIRE(t_closed(0) == Rational(1));
    REQUIRE(t_closed(1) == Rational(6));
    REQUIRE(t_closed(2) == Rational(252));

    SECTION("agrees with the integer-product route") {
        for (unsigned long n = 0; n <= 60; ++n) REQUIRE(t_closed(n) == t_integer_products(n));
    }
    SECTION("one-step ratio") {
        Rational cur(1);
        for (unsigned long n = 0; n < 40; ++n) {
            cur = t_next(n, cur);
            REQUIRE(cur == t_closed(n + 1));
        }
    }
}

TEST_CASE("u and v") {
    REQUIRE(u(0) == Rational(1));
    REQUIRE(u(1) == Rational(12));
    REQUIRE(v(0) == Rational(1));
    REQUIRE(v(1) == Rational(6));

    SECTION("binomial-product identities") {
        for (unsigned long n = 0; n <= 100; ++n) {
            REQUIRE(u(n) == Rational(binomial(4 * n, 2 * n) * binomial(2 * n, n)));
            REQUIRE(v(n) == Rational(binomial(3 * n, n) * binomial(2 * n, n)));
        }
    }
}

TEST_CASE("shift products match ratios of closed forms") {
    REQUIRE(s_shift_product(0, 5) == Rational(7033104));
    REQUIRE(s_shift_product(0, 5) == s_closed(5) / s_closed(0));
    REQUIRE(s_shift_product(1, 5) == s_closed(6) / s_closed(1));
    REQUIRE(s_shift_product(0, 13) == s_closed(13));
    REQUIRE(s_shift_product(4, 7) * s_closed(4) == s_closed(11));

    REQUIRE(t_shift_product(0, 7) == t_closed(7));
    REQUIRE(t_shift_product(2, 7) == t_closed(9) / t_closed(2));
    REQUIRE(t_shift_product(0, 13) == t_closed(13));
    REQUIRE(t_shift_product(3, 5) * t_closed(3) == t_closed(8));

    REQUIRE_THROWS_AS(s_shift_product(0, 6), std::invalid_argument);
}

TEST_CASE("sequence tables") {
    SECTION("recurrence extension matches direct evaluation") {
        for (SequenceId id : {SequenceId::apery, SequenceId::domb, SequenceId::s,
                              SequenceId::t, SequenceId::u, SequenceId::v}) {
            SequenceTable table(id);
            table.extend_to(30);
            for (unsigned long n : {0ul, 1ul, 7ul, 30ul})
                REQUIRE(table.at(n) == sequence_value(id, n));
        }
    }
    SECTION("closed-form vs recurrence agreement up to 200") {
        SequenceTable s_table(SequenceId::s);
        s_table.extend_to(200);  // construction cross-checks every index here
        REQUIRE(s_table.at(200) == s_closed(200));
        SequenceTable t_table(SequenceId::t);
        t_table.extend_to(200);
        REQUIRE(t_table.at(200) == t_closed(200));
    }
    SECTION("out-of-range access throws") {
        SequenceTable table(SequenceId::s);
        table.extend_to(3);
        REQUIRE_THROWS_AS(table.at(4), std::out_of_range);
    }
    SECTION("csv export") {
        SequenceTable table(SequenceId::apery);
        table.extend_to(2);
        std::ostringstream os;
        table.write_csv(os);
        REQUIRE(os.str() == "n,value\n0,1\n1,5\n2,73\n");
    }
}

TEST_CASE("integrality and sign observations") {
    SequenceCache cache;
    for (SequenceId id : {SequenceId::apery, SequenceId::domb, SequenceId::s, SequenceId::t,
                          SequenceId::u, SequenceId::v}) {
        SequenceTable& table = cache.table(id);
        table.extend_to(200);
        for (unsigned long n = 0; n <= 200; ++n) REQUIRE(table.at(n).is_integer());
    }
    for (unsigned long n = 0; n <= 200; ++n) {
        REQUIRE(cache.table(SequenceId::apery).at(n).sign() > 0);
        REQUIRE(cache.table(SequenceId::s).at(n).sign() > 0);
        REQUIRE(cache.table(SequenceId::t).at(n).sign() > 0);
        REQUIRE(cache.table(SequenceId::u).at(n).sign() > 0);
        REQUIRE(cache.table(SequenceId::v).at(n).sign() > 0);
    }
    // No global sign pattern is claimed for the Domb numbers beyond the
    // definition; check the first two values and nonvanishing.
    REQUIRE(domb(0) == Rational(1));
    REQUIRE(domb(1) == Rational(-4));
    for (unsigned long n = 0; n <= 50; ++n) REQUIRE_FALSE(domb(n).is_zero());
}

TEST_CASE("sequence names") {
    REQUIRE(sequence_from_string("S") == SequenceId::s);
    REQUIRE(sequence_from_string("apery") == SequenceId::apery);
    REQUIRE(sequence_from_string("Domb") == SequenceId::domb);
    REQUIRE_FALSE(sequence_from_string("W").has_value());
    REQUIRE(to_string(SequenceId::u) == "U");
}

TEST_CASE("theorem profiles") {
    REQUIRE(theorem_profile(SequenceId::s).modulus == 4);
    REQUIRE(theorem_profile(SequenceId::t).modulus == 6);
    REQUIRE(theorem_profile(SequenceId::apery).default_r == 3);
    REQUIRE(theorem_profile(SequenceId::s).default_r == 2);
    REQUIRE(hypothesis_met(SequenceId::s, 5, 3));
    REQUIRE_FALSE(hypothesis_met(SequenceId::s, 7, 3));
    REQUIRE(hypothesis_met(SequenceId::t, 7, 3));
    REQUIRE(hypothesis_met(SequenceId::u, 7, 1));
    REQUIRE_FALSE(hypothesis_met(SequenceId::u, 7, 2));
    REQUIRE(hypothesis_met(SequenceId::apery, 11, 8));
}
