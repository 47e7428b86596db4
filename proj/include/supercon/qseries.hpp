#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "supercon/rational.hpp"
#include "supercon/sequences.hpp"

namespace supercon {

// Formal truncated power series in the nome q with exact rational
// coefficients. Exponents are tracked in units of 1/24 so that
// eta(m*tau) = q^{m/24} prod (1 - q^{mn}) is representable directly;
// coefficient i multiplies q^{(base24 + 24*i)/24}. A series is known on the
// half-open exponent window [base24, base24 + 24*length), and its support
// starts at base24: everything below is exactly zero.
//
// Fractional exponents stay confined to the eta subsystem. Addition and any
// export path require the 1/24 parts to agree, so no general Puiseux
// arithmetic is ever needed.
class TruncatedSeries {
public:
    TruncatedSeries(long base24, std::vector<Rational> coeffs)
        : base24_(base24), coef_(std::move(coeffs)) {
        if (coef_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
    }

    static TruncatedSeries constant(const Rational& value, std::size_t length) {
        std::vector<Rational> c(length, Rational(0));
        if (length == 0) throw std::invalid_argument("TruncatedSeries: zero length");
        c[0] = value;
        return TruncatedSeries(0, std::move(c));
    }

    long base24() const { return base24_; }
    std::size_t length() const { return coef_.size(); }
    bool integral_exponents() const { return base24_ % 24 == 0; }
    const std::vector<Rational>& coefficients() const { return coef_; }
    const Rational& coeff(std::size_t i) const { return coef_.at(i); }

    // Exponent window end, in 1/24 units (exclusive).
    long end24() const { return base24_ + 24 * static_cast<long>(coef_.size()); }

    // Coefficient of q^e for an integral-exponent series; zero below the
    // support, error at or beyond the truncation boundary.
    Rational coefficient_q(long e) const {
        if (!integral_exponents())
            throw std::logic_error("TruncatedSeries: fractional exponents not exported");
        long e24 = 24 * e;
        if (e24 < base24_) return Rational(0);
        if (e24 >= end24()) throw std::out_of_range("TruncatedSeries: beyond truncation");
        return coef_[static_cast<std::size_t>((e24 - base24_) / 24)];
    }

    friend TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.coef_.size(), b.coef_.size());
        std::vector<Rational> c(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coef_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (b.coef_[j].is_zero()) continue;
                c[i + j] += a.coef_[i] * b.coef_[j];
            }
        }
        return TruncatedSeries(a.base24_ + b.base24_, std::move(c));
    }

    friend TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
        return combined(a, b, false);
    }
    friend TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
        return combined(a, b, true);
    }

    TruncatedSeries scaled(const Rational& factor) const {
        std::vector<Rational> c(coef_);
        for (Rational& x : c) x *= factor;
        return TruncatedSeries(base24_, std::move(c));
    }

    // 1/series. Needs an invertible coefficient at the leading exponent:
    // with a = a0 q^{b}(1 + u), the inverse coefficients follow from
    // b_n = -(1/a0) sum_{k=1}^{n} a_k b_{n-k}.
    TruncatedSeries reciprocal() const {
        if (coef_[0].is_zero())
            throw std::domain_error("TruncatedSeries: non-invertible leading coefficient");
        std::vector<Rational> inv(coef_.size(), Rational(0));
        Rational lead_inv = Rational(1) / coef_[0];
        inv[0] = lead_inv;
        for (std::size_t n = 1; n < coef_.size(); ++n) {
            Rational acc(0);
            for (std::size_t k = 1; k <= n; ++k) acc += coef_[k] * inv[n - k];
            inv[n] = -(lead_inv * acc);
        }
        return TruncatedSeries(-base24_, std::move(inv));
    }

private:
    static TruncatedSeries combined(const TruncatedSeries& a, const TruncatedSeries& b,
                                    bool subtract) {
        if ((a.base24_ - b.base24_) % 24 != 0)
            throw std::invalid_argument("TruncatedSeries: incompatible exponent grids");
        long base = std::min(a.base24_, b.base24_);
        long end = std::min(a.end24(), b.end24());
        if (end <= base) throw std::invalid_argument("TruncatedSeries: empty overlap window");
        std::size_t n = static_cast<std::size_t>((end - base) / 24);
        std::vector<Rational> c(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            long e = base + 24 * static_cast<long>(i);
            Rational lhs = (e >= a.base24_)
                               ? a.coef_[static_cast<std::size_t>((e - a.base24_) / 24)]
                               : Rational(0);
            Rational rhs = (e >= b.base24_)
                               ? b.coef_[static_cast<std::size_t>((e - b.base24_) / 24)]
                               : Rational(0);
            c[i] = subtract ? lhs - rhs : lhs + rhs;
        }
        return TruncatedSeries(base, std::move(c));
    }

    long base24_;
    std::vector<Rational> coef_;
};

// Integer power by binary exponentiation; negative powers go through the
// reciprocal. k = 0 yields the constant 1 on the same window length.
inline TruncatedSeries series_pow_int(const TruncatedSeries& a, long k) {
    if (k == 0) return TruncatedSeries::constant(Rational(1), a.length());
    TruncatedSeries base = k < 0 ? a.reciprocal() : a;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    TruncatedSeries acc = TruncatedSeries::constant(Rational(1), a.length());
    while (e > 0) {
        if (e & 1) acc = series_mul(acc, base);
        if (e >>= 1) base = series_mul(base, base);
    }
    return acc;
}

// (1 + u)^e for rational e, where the series must have integral exponents,
// base 0 and constant term exactly 1. Terms are accumulated as
// binom(e, k) u^k; u has positive order so k < length suffices.
inline TruncatedSeries series_pow_binomial(const TruncatedSeries& a, const Rational& e) {
    if (a.base24() != 0 || a.coeff(0) != Rational(1))
        throw std::domain_error("series_pow_binomial: constant term must be exactly 1");
    std::size_t n = a.length();
    std::vector<Rational> u(a.coefficients());
    u[0] = Rational(0);
    std::vector<Rational> term(n, Rational(0));
    term[0] = Rational(1);
    std::vector<Rational> acc(n, Rational(0));
    acc[0] = Rational(1);
    Rational coeff(1);
    for (std::size_t k = 1; k < n; ++k) {
        // term <- term * u (u has zero constant term, so order advances)
        std::vector<Rational> next(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (term[i].is_zero()) continue;
            for (std::size_t j = 1; i + j < n; ++j) {
                if (u[j].is_zero()) continue;
                next[i + j] += term[i] * u[j];
            }
        }
        term = std::move(next);
        coeff *= (e - Rational(static_cast<long>(k - 1))) / Rational(static_cast<long>(k));
        for (std::size_t i = k; i < n; ++i)
            if (!term[i].is_zero()) acc[i] += coeff * term[i];
    }
    return TruncatedSeries(0, std::move(acc));
}

// eta(m*tau) = q^{m/24} prod_{n>=1} (1 - q^{mn}), expanded by multiplying the
// truncated factors directly.
inline TruncatedSeries eta_expansion(unsigned long m, std::size_t length) {
    if (m == 0) throw std::invalid_argument("eta_expansion: multiplier must be >= 1");
    std::vector<Rational> c(length, Rational(0));
    c[0] = Rational(1);
    for (unsigned long n = 1; n * m < length; ++n) {
        std::size_t shift = static_cast<std::size_t>(n * m);
        for (std::size_t i = length; i-- > shift;) c[i] -= c[i - shift];
    }
    return TruncatedSeries(static_cast<long>(m), std::move(c));
}

// An eta quotient prod_i eta(m_i tau)^{e_i}.
struct EtaQuotientSpec {
    struct Factor {
        unsigned long multiplier;
        long exponent;
    };
    std::vector<Factor> factors;

    long net_exponent24() const {
        long total = 0;
        for (const Factor& f : factors) total += static_cast<long>(f.multiplier) * f.exponent;
        return total;
    }
};

inline TruncatedSeries eta_quotient_expand(const EtaQuotientSpec& spec, std::size_t length) {
    if (spec.net_exponent24() % 24 != 0)
        throw std::invalid_argument(
            "eta_quotient_expand: fractional net exponent (" +
            std::to_string(spec.net_exponent24()) + "/24) cannot be exported");
    TruncatedSeries acc = TruncatedSeries::constant(Rational(1), length);
    for (const EtaQuotientSpec::Factor& f : spec.factors)
        acc = series_mul(acc, series_pow_int(eta_expansion(f.multiplier, length), f.exponent));
    return acc;
}

// Theta series of the two binary quadratic forms: the coefficient of q^k
// counts integer pairs (m, n) with the form equal to k.
inline TruncatedSeries theta_sum_two_squares(std::size_t length) {
    std::vector<Rational> c(length, Rational(0));
    long bound = 1;
    while (bound * bound < static_cast<long>(2 * length)) ++bound;
    for (long m = -bound; m <= bound; ++m)
        for (long n = -bound; n <= bound; ++n) {
            long k = m * m + n * n;
            if (k < static_cast<long>(length)) c[static_cast<std::size_t>(k)] += Rational(1);
        }
    return TruncatedSeries(0, std::move(c));
}

inline TruncatedSeries theta_hexagonal(std::size_t length) {
    std::vector<Rational> c(length, Rational(0));
    long bound = 1;
    while (bound * bound < static_cast<long>(2 * length)) ++bound;
    for (long m = -bound; m <= bound; ++m)
        for (long n = -bound; n <= bound; ++n) {
            long k = m * m + m * n + n * n;
            if (k >= 0 && k < static_cast<long>(length))
                c[static_cast<std::size_t>(k)] += Rational(1);
        }
    return TruncatedSeries(0, std::move(c));
}

namespace detail {

// Coefficients of q^0 .. q^{count-1} as a plain vector. Requires integral
// exponents and a knowledge window covering [0, count).
inline std::vector<Rational> window(const TruncatedSeries& s, std::size_t count,
                                    const char* what) {
    if (!s.integral_exponents())
        throw std::invalid_argument(std::string(what) + ": series has fractional exponents");
    if (s.base24() < 0)
        throw std::invalid_argument(std::string(what) + ": negative leading exponent");
    if (s.end24() < 24 * static_cast<long>(count))
        throw std::invalid_argument(std::string(what) + ": insufficient truncation order");
    std::vector<Rational> w(count, Rational(0));
    for (std::size_t e = 0; e < count; ++e) {
        long e24 = 24 * static_cast<long>(e);
        if (e24 >= s.base24())
            w[e] = s.coeff(static_cast<std::size_t>((e24 - s.base24()) / 24));
    }
    return w;
}

inline std::vector<Rational> window_mul(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b) {
    std::vector<Rational> c(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

}  // namespace detail

// The unique c_0..c_{count-1} with Z == sum c_n X^n (mod q^count), for X with
// zero constant term and unit q-coefficient. X^n has leading term q^n, so the
// coefficients peel off by triangular elimination.
inline std::vector<Rational> expand_in_modular_function(const TruncatedSeries& Z,
                                                        const TruncatedSeries& X,
                                                        std::size_t count) {
    if (count == 0) return {};
    std::vector<Rational> rem = detail::window(Z, count, "expand_in_modular_function(Z)");
    std::vector<Rational> x = detail::window(X, count, "expand_in_modular_function(X)");
    if (!x[0].is_zero() || (count >= 2 && x[1] != Rational(1)))
        throw std::invalid_argument(
            "expand_in_modular_function: X must be q + O(q^2)");
    std::vector<Rational> xpow(count, Rational(0));
    xpow[0] = Rational(1);
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        Rational c = rem[n];
        out.push_back(c);
        if (!c.is_zero())
            for (std::size_t i = n; i < count; ++i) rem[i] -= c * xpow[i];
        xpow = detail::window_mul(xpow, x);
    }
    return out;
}

// Gauss hypergeometric series sum_n (a)_n (b)_n / ((c)_n n!) x^n, truncated.
inline TruncatedSeries gauss_2f1(const Rational& a, const Rational& b, const Rational& c,
                                 std::size_t length) {
    std::vector<Rational> coeffs(length, Rational(0));
    Rational term(1);
    coeffs[0] = term;
    for (std::size_t n = 0; n + 1 < length; ++n) {
        Rational nn(static_cast<long>(n));
        Rational denom = (c + nn) * (nn + Rational(1));
        if (denom.is_zero()) throw std::domain_error("gauss_2f1: pole of (c)_n");
        term *= (a + nn) * (b + nn) / denom;
        coeffs[n + 1] = term;
    }
    return TruncatedSeries(0, std::move(coeffs));
}

// f(w) for a series w with zero constant term, by Horner evaluation over the
// truncated window.
inline TruncatedSeries compose_at_zero(const TruncatedSeries& f, const TruncatedSeries& w) {
    std::size_t n = std::min(f.length(), w.length());
    std::vector<Rational> fv = detail::window(f, n, "compose_at_zero(f)");
    std::vector<Rational> wv = detail::window(w, n, "compose_at_zero(w)");
    if (!wv[0].is_zero())
        throw std::invalid_argument("compose_at_zero: inner series must vanish at 0");
    std::vector<Rational> acc(n, Rational(0));
    acc[0] = fv[n - 1];
    for (std::size_t k = n - 1; k-- > 0;) {
        acc = detail::window_mul(acc, wv);
        acc[0] += fv[k];
    }
    return TruncatedSeries(0, std::move(acc));
}

// 2F1(1/4, 3/4; 1; x) == (1-x)^{-1/4} 2F1(1/4, 1/4; 1; x/(x-1)), checked
// coefficient-by-coefficient through x^order.
inline bool kummer_transformation_check(std::size_t order) {
    std::size_t n = order + 1;
    TruncatedSeries lhs = gauss_2f1(Rational(1, 4), Rational(3, 4), Rational(1), n);
    // x/(x-1) = -x - x^2 - x^3 - ...
    std::vector<Rational> w(n, Rational(-1));
    w[0] = Rational(0);
    TruncatedSeries inner =
        compose_at_zero(gauss_2f1(Rational(1, 4), Rational(1, 4), Rational(1), n),
                        TruncatedSeries(0, std::move(w)));
    std::vector<Rational> one_minus_x(n, Rational(0));
    one_minus_x[0] = Rational(1);
    if (n > 1) one_minus_x[1] = Rational(-1);
    TruncatedSeries prefactor =
        series_pow_binomial(TruncatedSeries(0, std::move(one_minus_x)), Rational(-1, 4));
    TruncatedSeries rhs = series_mul(prefactor, inner);
    for (std::size_t i = 0; i < n; ++i)
        if (lhs.coeff(i) != rhs.coeff(i)) return false;
    return true;
}

// 2F1(1/3, 2/3; 1; x) == 2F1(1/3, 1/6; 1; 4x(1-x)) through x^order.
inline bool cubic_transformation_check(std::size_t order) {
    std::size_t n = order + 1;
    TruncatedSeries lhs = gauss_2f1(Rational(1, 3), Rational(2, 3), Rational(1), n);
    std::vector<Rational> w(n, Rational(0));
    if (n > 1) w[1] = Rational(4);
    if (n > 2) w[2] = Rational(-4);
    TruncatedSeries rhs =
        compose_at_zero(gauss_2f1(Rational(1, 3), Rational(1, 6), Rational(1), n),
                        TruncatedSeries(0, std::move(w)));
    for (std::size_t i = 0; i < n; ++i)
        if (lhs.coeff(i) != rhs.coeff(i)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// The named expansion pairs: each sequence arises as Z = sum a_n X^n.
// ---------------------------------------------------------------------------

inline TruncatedSeries apery_weight_series(std::size_t length) {
    return eta_quotient_expand({{{2, 7}, {3, 7}, {1, -5}, {6, -5}}}, length);
}
inline TruncatedSeries apery_hauptmodul(std::size_t length) {
    return eta_quotient_expand({{{1, 12}, {6, 12}, {2, -12}, {3, -12}}}, length);
}
inline TruncatedSeries domb_weight_series(std::size_t length) {
    return eta_quotient_expand({{{1, 4}, {3, 4}, {2, -2}, {6, -2}}}, length);
}
inline TruncatedSeries domb_hauptmodul(std::size_t length) {
    return eta_quotient_expand({{{2, 6}, {6, 6}, {1, -6}, {3, -6}}}, length);
}
inline TruncatedSeries s_weight_series(std::size_t length) { return theta_sum_two_squares(length); }
inline TruncatedSeries s_hauptmodul(std::size_t length) {
    TruncatedSeries eta2_12 = series_pow_int(eta_expansion(2, length), 12);
    return series_mul(eta2_12, series_pow_int(theta_sum_two_squares(length), 6).reciprocal());
}
inline TruncatedSeries t_weight_series(std::size_t length) { return theta_hexagonal(length); }

// The companion modular function for the hexagonal theta series. Written as
// eta(tau)^6 eta(3tau)^6 / Z3^6: the eta(tau)^6 eta(tau)^6 variant has net
// exponent 12/24 and admits no q-expansion, so the 3tau form is used and is
// validated downstream by recovering t_n (see qseries_cross_check).
inline TruncatedSeries t_hauptmodul(std::size_t length) {
    TruncatedSeries etas =
        series_mul(series_pow_int(eta_expansion(1, length), 6),
                   series_pow_int(eta_expansion(3, length), 6));
    return series_mul(etas, series_pow_int(theta_hexagonal(length), 6).reciprocal());
}

inline std::optional<TruncatedSeries> named_series(std::string_view name, std::size_t length) {
    std::string up(name);
    for (char& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (up == "Z") return apery_weight_series(length);
    if (up == "X") return apery_hauptmodul(length);
    if (up == "ZD") return domb_weight_series(length);
    if (up == "XD") return domb_hauptmodul(length);
    if (up == "Z2") return s_weight_series(length);
    if (up == "X2") return s_hauptmodul(length);
    if (up == "Z3") return t_weight_series(length);
    if (up == "X3") return t_hauptmodul(length);
    return std::nullopt;
}

inline void write_series_csv(std::ostream& os, const TruncatedSeries& s) {
    if (!s.integral_exponents())
        throw std::invalid_argument("write_series_csv: series has fractional exponents");
    os << "exponent,numerator,denominator\n";
    for (std::size_t i = 0; i < s.length(); ++i)
        os << (s.base24() / 24 + static_cast<long>(i)) << ',' << s.coeff(i).numerator() << ','
           << s.coeff(i).denominator() << '\n';
}

// Re-derives the first `count` terms of a sequence from its modular-function
// expansion and compares them with the direct formula.
struct CrossCheckBlock {
    SequenceId sequence;
    std::vector<Rational> expanded;
    std::vector<Rational> direct;
    bool match = false;
    std::string note;
};

inline CrossCheckBlock qseries_cross_check(SequenceId id, std::size_t count,
                                           std::size_t truncation) {
    if (truncation < count + 4) truncation = count + 4;
    CrossCheckBlock block;
    block.sequence = id;
    TruncatedSeries weight = TruncatedSeries::constant(Rational(1), truncation);
    TruncatedSeries haupt = weight;
    switch (id) {
        case SequenceId::apery:
            weight = apery_weight_series(truncation);
            haupt = apery_hauptmodul(truncation);
            break;
        case SequenceId::domb:
            weight = domb_weight_series(truncation);
            haupt = domb_hauptmodul(truncation);
            break;
        case SequenceId::s:
            weight = s_weight_series(truncation);
            haupt = s_hauptmodul(truncation);
            break;
        case SequenceId::t:
            weight = t_weight_series(truncation);
            haupt = t_hauptmodul(truncation);
            block.note = "X3 realized as eta(tau)^6 eta(3tau)^6 / Z3^6";
            break;
        default:
            throw std::invalid_argument("qseries_cross_check: no expansion pair for sequence");
    }
    block.expanded = expand_in_modular_function(weight, haupt, count);
    block.direct.reserve(count);
    for (std::size_t n = 0; n < count; ++n)
        block.direct.push_back(sequence_value(id, static_cast<unsigned long>(n)));
    block.match = block.expanded == block.direct;
    return block;
}

}  // namespace supercon
