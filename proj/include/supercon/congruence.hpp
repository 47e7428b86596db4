#pragma once

#include <stdexcept>

#include "supercon/rational.hpp"

namespace supercon {

// A claim "lhs == rhs (mod p^r)" between rationals, with congruence defined
// as v_p(lhs - rhs) >= r. Primes 2 and 3 are rejected outright: every result
// handled here lives in residue classes of primes p > 3.
struct CongruenceClaim {
    Rational lhs;
    Rational rhs;
    unsigned long prime;
    long exponent;

    CongruenceClaim(Rational l, Rational r, unsigned long p, long e)
        : lhs(std::move(l)), rhs(std::move(r)), prime(p), exponent(e) {
        if (p <= 3) throw std::invalid_argument("CongruenceClaim: requires prime p > 3");
        if (!is_prime(p)) throw std::invalid_argument("CongruenceClaim: p is not prime");
        if (e < 1) throw std::invalid_argument("CongruenceClaim: exponent must be >= 1");
    }
};

struct CongruenceResult {
    bool holds = false;
    Valuation valuation;  // exact v_p(lhs - rhs), so reports can show margin
};

inline CongruenceResult congruent_mod(const CongruenceClaim& claim) {
    Valuation v = padic_valuation(claim.lhs - claim.rhs, claim.prime);
    return CongruenceResult{v.at_least(claim.exponent), v};
}

inline CongruenceResult congruent_mod(const Rational& lhs, const Rational& rhs,
                                      unsigned long p, long r) {
    return congruent_mod(CongruenceClaim(lhs, rhs, p, r));
}

}  // namespace supercon
