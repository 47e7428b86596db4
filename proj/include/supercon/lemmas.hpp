#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "supercon/congruence.hpp"
#include "supercon/number_theory.hpp"
#include "supercon/sequences.hpp"

namespace supercon {

// Raised when a verifier is invoked outside its residue class. The index
// arithmetic of each check (e.g. the omitted factor position (p-1)/4) is
// meaningless elsewhere, so this is a hard error rather than a skip.
struct ResidueClassError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_class(unsigned long p, unsigned long modulus, const char* what) {
    if (p <= 3 || !is_prime(p))
        throw ResidueClassError(std::string(what) + ": requires a prime p > 3");
    if (p % modulus != 1)
        throw ResidueClassError(std::string(what) + ": requires p == 1 (mod " +
                                std::to_string(modulus) + "), got p = " + std::to_string(p));
}

// prod over k in [0, count) of (offset + step*k + shift), k != skip.
inline Rational product_skipping(const Rational& offset, long step, unsigned long count,
                                 unsigned long skip) {
    Rational prod(1);
    for (unsigned long k = 0; k < count; ++k) {
        if (k == skip) continue;
        prod *= offset + Rational(step * static_cast<long>(k));
    }
    return prod;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Pochhammer congruence layers, p == 1 (mod 4)
// ---------------------------------------------------------------------------

// (3/4)_p == 3 (1/4)_p (mod p^3).
inline CongruenceResult lemma20_check(unsigned long p) {
    detail::require_class(p, 4, "lemma20_check");
    Rational lhs = rising_factorial(Rational(3, 4), p);
    Rational rhs = Rational(3) * rising_factorial(Rational(1, 4), p);
    return congruent_mod(lhs, rhs, p, 3);
}

struct ProductPair {
    Rational lhs;
    Rational rhs;
    CongruenceResult result;
};

// Truncations of the two Pochhammer products with the p-divisible factor
// removed: L(p) omits k = (3p-3)/4 from prod (3/4 + k), R(p) omits
// k = (p-1)/4 from prod (1/4 + k). Claim: L == R (mod p^2).
inline ProductPair eq22_products(unsigned long p) {
    detail::require_class(p, 4, "eq22_products");
    Rational L = detail::product_skipping(Rational(3, 4), 1, p, (3 * p - 3) / 4);
    Rational R = detail::product_skipping(Rational(1, 4), 1, p, (p - 1) / 4);
    return ProductPair{L, R, congruent_mod(L, R, p, 2)};
}

struct HalfProducts {
    Rational l;
    Rational r;
    Rational paired;  // prod_{k=0}^{(p-5)/4} (-1/4 - k - k^2)
    CongruenceResult l_vs_r;
    CongruenceResult l_vs_paired;
    CongruenceResult r_vs_paired;
};

// The half-range products l(p) = prod_{k=0}^{(p-3)/2} (3/4 + k) and
// r(p) = prod_{k=(p+1)/2}^{p-1} (1/4 + k), each congruent mod p^2 to the
// common paired form prod (-1/4 - k - k^2).
inline HalfProducts eq23_products(unsigned long p) {
    detail::require_class(p, 4, "eq23_products");
    HalfProducts out;
    out.l = Rational(1);
    for (unsigned long k = 0; k <= (p - 3) / 2; ++k)
        out.l *= Rational(3, 4) + Rational(static_cast<long>(k));
    out.r = Rational(1);
    for (unsigned long k = (p + 1) / 2; k <= p - 1; ++k)
        out.r *= Rational(1, 4) + Rational(static_cast<long>(k));
    out.paired = Rational(1);
    for (unsigned long k = 0; k <= (p - 5) / 4; ++k) {
        long kk = static_cast<long>(k);
        out.paired *= Rational(-1, 4) - Rational(kk) - Rational(kk) * Rational(kk);
    }
    out.l_vs_r = congruent_mod(out.l, out.r, p, 2);
    out.l_vs_paired = congruent_mod(out.l, out.paired, p, 2);
    out.r_vs_paired = congruent_mod(out.r, out.paired, p, 2);
    return out;
}

// Integer form: prod (3+4k), k != (3p-3)/4, vs prod (1+4k), k != (p-1)/4,
// both over k in [0, p-1], congruent mod p^2.
inline ProductPair corollary24_check(unsigned long p) {
    detail::require_class(p, 4, "corollary24_check");
    Rational lhs = detail::product_skipping(Rational(3), 4, p, (3 * p - 3) / 4);
    Rational rhs = detail::product_skipping(Rational(1), 4, p, (p - 1) / 4);
    return ProductPair{lhs, rhs, congruent_mod(lhs, rhs, p, 2)};
}

// ---------------------------------------------------------------------------
// The one-step ratio normalizations F(n) and G(n)
// ---------------------------------------------------------------------------

// F(n) = 4^{p-1} prod_{j != (p-1)/4} (1+4j+4np)^2 / prod_{i=0}^{p-2} (1+i+np)^2.
// Equals s_{(n+1)p} / (s_{np} * s_{n+1}/s_n); congruent to 1 mod p^2 for
// every n when p == 1 (mod 4).
inline Rational F_value(unsigned long n, unsigned long p) {
    detail::require_class(p, 4, "F_value");
    Rational num(1);
    for (unsigned long j = 0; j < p; ++j) {
        if (j == (p - 1) / 4) continue;
        Rational f(static_cast<long>(1 + 4 * j + 4 * n * p));
        num *= f * f;
    }
    Rational den(1);
    for (unsigned long i = 0; i + 1 < p; ++i) {
        Rational f(static_cast<long>(1 + i + n * p));
        den *= f * f;
    }
    return Rational::pow(Rational(4), p - 1) * num / den;
}

struct NumeratorSplit {
    Rational a;
    Rational b;
};

// Splits the F-numerator prod_{j != (p-1)/4} (1+4j+4np)^2 as A(n) * B(n):
// A pairs factors symmetrically about j = (p-1)/4 (the j-range [0, (p-1)/2]),
// B pairs the remaining range [(p+1)/2, p-1] about 3p + 4np.
inline NumeratorSplit AB_split(unsigned long n, unsigned long p) {
    detail::require_class(p, 4, "AB_split");
    NumeratorSplit out{Rational(1), Rational(1)};
    long np4 = static_cast<long>(4 * n * p);
    for (unsigned long j = 1; j <= (p - 1) / 4; ++j) {
        Rational lo(static_cast<long>(1 + 4 * ((p - 1) / 4 - j)) + np4);
        Rational hi(static_cast<long>(1 + 4 * ((p - 1) / 4 + j)) + np4);
        out.a *= lo * lo * hi * hi;
    }
    for (unsigned long k = 1; k <= (p - 1) / 4; ++k) {
        Rational lo(np4 + static_cast<long>(3 * p) - static_cast<long>(4 * k - 2));
        Rational hi(np4 + static_cast<long>(3 * p) + static_cast<long>(4 * k - 2));
        out.b *= lo * lo * hi * hi;
    }
    return out;
}

// Reduction targets for the split: A(n) == prod 16^2 j^4 and
// B(n) == prod (-4 + 16k - 16k^2)^2 (mod p^2), both independent of n.
inline Rational AB_a_reduced(unsigned long p) {
    Rational prod(1);
    for (unsigned long j = 1; j <= (p - 1) / 4; ++j) {
        Rational jj(static_cast<long>(j));
        prod *= Rational(256) * jj * jj * jj * jj;
    }
    return prod;
}

inline Rational AB_b_reduced(unsigned long p) {
    Rational prod(1);
    for (unsigned long k = 1; k <= (p - 1) / 4; ++k) {
        long kk = static_cast<long>(k);
        Rational f = Rational(-4) + Rational(16 * kk) - Rational(16 * kk * kk);
        prod *= f * f;
    }
    return prod;
}

// G(n) = 6^{p-1} prod_{j != (p-1)/6} (1+6j+6np) prod_{j != (p-1)/3} (1+3j+3np)
//        / prod_{i=0}^{p-2} (1+i+np)^2, for p == 1 (mod 6); == 1 (mod p^2).
inline Rational G_value(unsigned long n, unsigned long p) {
    detail::require_class(p, 6, "G_value");
    Rational num(1);
    for (unsigned long j = 0; j < p; ++j) {
        if (j == (p - 1) / 6) continue;
        num *= Rational(static_cast<long>(1 + 6 * j + 6 * n * p));
    }
    for (unsigned long j = 0; j < p; ++j) {
        if (j == (p - 1) / 3) continue;
        num *= Rational(static_cast<long>(1 + 3 * j + 3 * n * p));
    }
    Rational den(1);
    for (unsigned long i = 0; i + 1 < p; ++i) {
        Rational f(static_cast<long>(1 + i + n * p));
        den *= f * f;
    }
    return Rational::pow(Rational(6), p - 1) * num / den;
}

// ---------------------------------------------------------------------------
// The p == 1 (mod 6) layer
// ---------------------------------------------------------------------------

// 4^p (1/6)_p == (2/3)_p (mod p^3).
inline CongruenceResult lemma51_check(unsigned long p) {
    detail::require_class(p, 6, "lemma51_check");
    Rational lhs = Rational::pow(Rational(4), p) * rising_factorial(Rational(1, 6), p);
    Rational rhs = rising_factorial(Rational(2, 3), p);
    return congruent_mod(lhs, rhs, p, 3);
}

struct MNRewrite {
    Rational m;
    Rational n;
    CongruenceResult m_result;  // M(q) vs 3^{4q} prod (2k-1)^2   (mod p^2)
    CongruenceResult n_result;  // N(q) vs (3/2)^{2q} prod -(2k-1)^2 (mod p^2)
};

// The two auxiliary products in the reduction of the (1/6)/(2/3) congruence:
// M(q) = prod_{k=1}^{4q} (12q+1+6k) and
// N(q) = prod_{k=1}^{q} (3q + 1/2 - (6k-3)/2)(3q + 1/2 + (6k-3)/2),
// with their mod-p^2 rewrites in terms of odd squares.
inline MNRewrite MN_values(unsigned long q) {
    if (q == 0) throw std::invalid_argument("MN_values: q must be positive");
    unsigned long p = 6 * q + 1;
    if (!is_prime(p))
        throw std::invalid_argument("MN_values: 6q+1 = " + std::to_string(p) + " is not prime");

    MNRewrite out;
    out.m = Rational(1);
    for (unsigned long k = 1; k <= 4 * q; ++k)
        out.m *= Rational(static_cast<long>(12 * q + 1 + 6 * k));
    Rational m_target = Rational::pow(Rational(3), 4 * q);
    for (unsigned long k = 1; k <= 2 * q; ++k) {
        Rational odd(static_cast<long>(2 * k - 1));
        m_target *= odd * odd;
    }
    out.m_result = congruent_mod(out.m, m_target, p, 2);

    out.n = Rational(1);
    Rational center = Rational(static_cast<long>(3 * q)) + Rational(1, 2);
    for (unsigned long k = 1; k <= q; ++k) {
        Rational half(static_cast<long>(6 * k - 3), 2);
        out.n *= (center - half) * (center + half);
    }
    Rational n_target = Rational::pow(Rational(3, 2), 2 * q);
    for (unsigned long k = 1; k <= q; ++k) {
        Rational odd(static_cast<long>(2 * k - 1));
        n_target *= -(odd * odd);
    }
    out.n_result = congruent_mod(out.n, n_target, p, 2);
    return out;
}

struct NamedCheck {
    std::string name;
    unsigned long prime = 0;
    unsigned long n = 0;  // second argument where one applies (n, q, or i)
    CongruenceResult result;
};

// The four harmonic-sum congruences mod p used to close the reduction, with
// p = 6q + 1:
//   h6q_zero:     H_{6q} == 0
//   h3q_fold:     H_{3q} == -H_{2q} + H_q
//   fermat_link:  (2^{p-1} - 1)/p == H_{6q} - H_{3q}/2
//   doubled_link: 2 (2^{6q} - 1)/p == H_{2q} - H_q
inline std::vector<NamedCheck> harmonic_identities_check(unsigned long p) {
    detail::require_class(p, 6, "harmonic_identities_check");
    unsigned long q = (p - 1) / 6;
    Rational hq = harmonic(q);
    Rational h2q = harmonic(2 * q);
    Rational h3q = harmonic(3 * q);
    Rational h6q = harmonic(6 * q);
    Rational fq = fermat_quotient(mpz_class(2), p);

    std::vector<NamedCheck> out;
    out.push_back({"harmonic.h6q_zero", p, q, congruent_mod(h6q, Rational(0), p, 1)});
    out.push_back({"harmonic.h3q_fold", p, q, congruent_mod(h3q, -h2q + hq, p, 1)});
    out.push_back(
        {"harmonic.fermat_link", p, q, congruent_mod(fq, h6q - h3q / Rational(2), p, 1)});
    out.push_back(
        {"harmonic.doubled_link", p, q, congruent_mod(Rational(2) * fq, h2q - hq, p, 1)});
    return out;
}

// 1/i + 1/(3q+1-i) == 1/i - 2/(2i-1) (mod p) for 1 <= i <= q, p = 6q+1.
inline CongruenceResult pairing_identity_check(unsigned long i, unsigned long p) {
    detail::require_class(p, 6, "pairing_identity_check");
    unsigned long q = (p - 1) / 6;
    if (i < 1 || i > q)
        throw std::invalid_argument("pairing_identity_check: i must lie in [1, q]");
    Rational lhs = Rational(1, static_cast<long>(i)) +
                   Rational(1, static_cast<long>(3 * q + 1 - i));
    Rational rhs = Rational(1, static_cast<long>(i)) -
                   Rational(2) / Rational(static_cast<long>(2 * i - 1));
    return congruent_mod(lhs, rhs, p, 1);
}

// ---------------------------------------------------------------------------
// The n = 1 chains
// ---------------------------------------------------------------------------

// s_p == (1/3) C(4p,2p) C(2p,p) == 4 (mod p^2), each link checked separately.
inline std::vector<NamedCheck> lemma32_chain_check(unsigned long p) {
    detail::require_class(p, 4, "lemma32_chain_check");
    Rational sp = s_closed(p);
    Rational mid = Rational(binomial(4 * p, 2 * p) * binomial(2 * p, p)) / Rational(3);
    std::vector<NamedCheck> out;
    out.push_back({"lemma32.sp_vs_binomials", p, 1, congruent_mod(sp, mid, p, 2)});
    out.push_back({"lemma32.binomials_vs_4", p, 1, congruent_mod(mid, Rational(4), p, 2)});
    return out;
}

// t_p == 27^p (2/3)_p (1/3)_p / (1)_p^2 == C(3p,p) C(2p,p) == 6 (mod p^2).
inline std::vector<NamedCheck> eq5051_chain_check(unsigned long p) {
    detail::require_class(p, 6, "eq5051_chain_check");
    Rational tp = t_closed(p);
    Rational fact(factorial(p));
    Rational mid = Rational::pow(Rational(27), p) * rising_factorial(Rational(2, 3), p) *
                   rising_factorial(Rational(1, 3), p) / (fact * fact);
    Rational bins(binomial(3 * p, p) * binomial(2 * p, p));
    std::vector<NamedCheck> out;
    out.push_back({"eq5051.tp_vs_pochhammer", p, 1, congruent_mod(tp, mid, p, 2)});
    out.push_back({"eq5051.pochhammer_vs_binomials", p, 1, congruent_mod(mid, bins, p, 2)});
    out.push_back({"eq5051.binomials_vs_6", p, 1, congruent_mod(bins, Rational(6), p, 2)});
    return out;
}

// ---------------------------------------------------------------------------
// Name-indexed driver used by the CLI and the batch suites
// ---------------------------------------------------------------------------

struct LemmaInfo {
    const char* name;
    unsigned long modulus;  // residue class of qualifying primes (p == 1 mod this)
};

inline const std::vector<LemmaInfo>& lemma_catalog() {
    static const std::vector<LemmaInfo> catalog = {
        {"lemma20", 4}, {"eq22", 4},    {"eq23", 4}, {"corollary24", 4}, {"F", 4},
        {"AB", 4},      {"lemma32", 4}, {"lemma51", 6}, {"MN", 6},       {"harmonic", 6},
        {"pairing", 6}, {"G", 6},       {"eq5051", 6},
    };
    return catalog;
}

inline const LemmaInfo* lemma_lookup(const std::string& name) {
    for (const LemmaInfo& info : lemma_catalog())
        if (name == info.name) return &info;
    return nullptr;
}

// Runs the named verifier at one prime and returns one record per asserted
// congruence. For F/AB/G the index ranges over [0, n_max]; for pairing, over
// all admissible i.
inline std::vector<NamedCheck> run_lemma(const std::string& name, unsigned long p,
                                         unsigned long n_max = 10) {
    std::vector<NamedCheck> out;
    if (name == "lemma20") {
        out.push_back({"lemma20", p, 0, lemma20_check(p)});
    } else if (name == "eq22") {
        out.push_back({"eq22", p, 0, eq22_products(p).result});
    } else if (name == "eq23") {
        HalfProducts h = eq23_products(p);
        out.push_back({"eq23.l_vs_r", p, 0, h.l_vs_r});
        out.push_back({"eq23.l_vs_paired", p, 0, h.l_vs_paired});
        out.push_back({"eq23.r_vs_paired", p, 0, h.r_vs_paired});
    } else if (name == "corollary24") {
        out.push_back({"corollary24", p, 0, corollary24_check(p).result});
    } else if (name == "F") {
        Rational f0 = F_value(0, p);
        out.push_back({"F.f0_vs_1", p, 0, congruent_mod(f0, Rational(1), p, 2)});
        for (unsigned long n = 1; n <= n_max; ++n) {
            Rational fn = F_value(n, p);
            out.push_back({"F.fn_vs_1", p, n, congruent_mod(fn, Rational(1), p, 2)});
            out.push_back({"F.fn_vs_f0", p, n, congruent_mod(fn, f0, p, 2)});
        }
    } else if (name == "AB") {
        Rational a_target = AB_a_reduced(p);
        Rational b_target = AB_b_reduced(p);
        for (unsigned long n = 0; n <= n_max; ++n) {
            NumeratorSplit split = AB_split(n, p);
            // The split must reproduce the F-numerator exactly.
            Rational numerator(1);
            for (unsigned long j = 0; j < p; ++j) {
                if (j == (p - 1) / 4) continue;
                Rational f(static_cast<long>(1 + 4 * j + 4 * n * p));
                numerator *= f * f;
            }
            Rational diff = split.a * split.b - numerator;
            out.push_back({"AB.product_identity", p, n,
                           CongruenceResult{diff.is_zero(), padic_valuation(diff, p)}});
            out.push_back({"AB.a_reduced", p, n, congruent_mod(split.a, a_target, p, 2)});
            out.push_back({"AB.b_reduced", p, n, congruent_mod(split.b, b_target, p, 2)});
        }
    } else if (name == "G") {
        Rational g0 = G_value(0, p);
        out.push_back({"G.g0_vs_1", p, 0, congruent_mod(g0, Rational(1), p, 2)});
        for (unsigned long n = 1; n <= n_max; ++n) {
            Rational gn = G_value(n, p);
            out.push_back({"G.gn_vs_1", p, n, congruent_mod(gn, Rational(1), p, 2)});
            out.push_back({"G.gn_vs_g0", p, n, congruent_mod(gn, g0, p, 2)});
        }
    } else if (name == "lemma51") {
        detail::require_class(p, 6, "lemma51_check");
        out.push_back({"lemma51", p, 0, lemma51_check(p)});
    } else if (name == "MN") {
        detail::require_class(p, 6, "MN_values");
        unsigned long q = (p - 1) / 6;
        MNRewrite mn = MN_values(q);
        out.push_back({"MN.m_rewrite", p, q, mn.m_result});
        out.push_back({"MN.n_rewrite", p, q, mn.n_result});
    } else if (name == "harmonic") {
        out = harmonic_identities_check(p);
    } else if (name == "pairing") {
        detail::require_class(p, 6, "pairing_identity_check");
        unsigned long q = (p - 1) / 6;
        for (unsigned long i = 1; i <= q; ++i)
            out.push_back({"pairing", p, i, pairing_identity_check(i, p)});
    } else if (name == "lemma32") {
        out = lemma32_chain_check(p);
    } else if (name == "eq5051") {
        out = eq5051_chain_check(p);
    } else {
        throw std::invalid_argument("run_lemma: unknown check name '" + name + "'");
    }
    return out;
}

}  // namespace supercon
