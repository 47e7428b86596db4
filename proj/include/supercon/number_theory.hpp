#pragma once

#include <stdexcept>
#include <vector>

#include "supercon/rational.hpp"

namespace supercon {

// C(n, k); zero when k > n.
inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    if (k > n) return r;  // 0
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Rising factorial (a)_n = a(a+1)...(a+n-1); empty product for n == 0.
inline Rational rising_factorial(const Rational& a, unsigned long n) {
    Rational r(1);
    Rational factor = a;
    for (unsigned long k = 0; k < n; ++k) {
        r *= factor;
        factor += Rational(1);
    }
    return r;
}

// H_n = sum_{k=1}^{n} 1/k; H_0 = 0.
inline Rational harmonic(unsigned long n) {
    Rational h(0);
    for (unsigned long k = 1; k <= n; ++k) h += Rational(1, static_cast<long>(k));
    return h;
}

// (a^{p-1} - 1)/p, an integer whenever p does not divide a.
inline Rational fermat_quotient(const mpz_class& a, unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("fermat_quotient: p must be prime");
    if (a % static_cast<unsigned long>(p) == 0)
        throw std::invalid_argument("fermat_quotient: p divides a");
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), a.get_mpz_t(), p - 1);
    return Rational(t - 1, mpz_class(static_cast<unsigned long>(p)));
}

// Inverse of a modulo p, reduced to [1, p-1]. Errors when p | a.
inline unsigned long mod_inverse(const mpz_class& a, unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("mod_inverse: p must be prime");
    mpz_class inv, pz(static_cast<unsigned long>(p));
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw std::invalid_argument("mod_inverse: not invertible (p divides a)");
    return inv.get_ui();
}

// All primes p with 3 < p <= bound and p == residue (mod modulus), ascending.
inline std::vector<unsigned long> prime_stream(unsigned long bound, unsigned long modulus,
                                               unsigned long residue) {
    if (modulus < 1) throw std::invalid_argument("prime_stream: modulus must be >= 1");
    if (residue >= modulus) throw std::invalid_argument("prime_stream: residue out of range");
    std::vector<unsigned long> out;
    if (bound < 5) return out;
    std::vector<bool> composite(bound + 1, false);
    for (unsigned long i = 2; i * i <= bound; ++i)
        if (!composite[i])
            for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
    for (unsigned long p = 5; p <= bound; ++p)
        if (!composite[p] && p % modulus == residue) out.push_back(p);
    return out;
}

}  // namespace supercon
