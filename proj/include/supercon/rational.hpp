#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace supercon {

// Arbitrary-precision rational in canonical form: denominator > 0,
// gcd(|num|, den) == 1, zero stored as 0/1. Every operation re-normalizes,
// so two equal values always have identical representations.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(unsigned long n) : num_(), den_(1) { num_ = n; }
    Rational(int n) : num_(n), den_(1) {}
    Rational(mpz_class n) : num_(std::move(n)), den_(1) {}

    Rational(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    const mpz_class& numerator() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const { return sgn(num_) == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        if (sgn(den_) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    // base^k with k >= 0 applied to numerator and denominator separately.
    static Rational pow(const Rational& base, unsigned long k) {
        Rational r;
        mpz_pow_ui(r.num_.get_mpz_t(), base.num_.get_mpz_t(), k);
        mpz_pow_ui(r.den_.get_mpz_t(), base.den_.get_mpz_t(), k);
        return r;  // base canonical => powers share no factor
    }

    std::string to_string() const {
        std::string s = num_.get_str();
        if (den_ != 1) {
            s += '/';
            s += den_.get_str();
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    void normalize() {
        if (sgn(den_) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (sgn(num_) == 0) {
            den_ = 1;
            return;
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    mpz_class num_;
    mpz_class den_;  // > 0
};

// p-adic valuation of a rational. The valuation of zero is the distinguished
// infinite value, which compares >= any finite bound.
struct Valuation {
    unsigned long prime = 0;
    bool infinite = false;
    long value = 0;  // meaningful only when !infinite

    bool at_least(long r) const { return infinite || value >= r; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.prime == b.prime && a.infinite == b.infinite &&
               (a.infinite || a.value == b.value);
    }

    std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (unsigned long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// v_p(x) = v_p(numerator) - v_p(denominator); INF for x == 0.
inline Valuation padic_valuation(const Rational& x, unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p must be prime");
    if (x.is_zero()) return Valuation{p, true, 0};
    mpz_class rem, pz(static_cast<unsigned long>(p));
    long v = static_cast<long>(
        mpz_remove(rem.get_mpz_t(), x.numerator().get_mpz_t(), pz.get_mpz_t()));
    v -= static_cast<long>(
        mpz_remove(rem.get_mpz_t(), x.denominator().get_mpz_t(), pz.get_mpz_t()));
    return Valuation{p, false, v};
}

}  // namespace supercon
