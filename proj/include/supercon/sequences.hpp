#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "supercon/number_theory.hpp"
#include "supercon/rational.hpp"

namespace supercon {

// The six sequences: the Apery and Domb numbers plus the four hypergeometric
// coefficient sequences
//   s_n = 64^n (1/4)_n^2 / (1)_n^2          t_n = 108^n (1/6)_n (1/3)_n / (1)_n^2
//   u_n = 64^n (1/4)_n (3/4)_n / (1)_n^2    v_n = 27^n (1/3)_n (2/3)_n / (1)_n^2
enum class SequenceId { apery, domb, s, t, u, v };

inline std::string_view to_string(SequenceId id) {
    switch (id) {
        case SequenceId::apery: return "APERY";
        case SequenceId::domb: return "DOMB";
        case SequenceId::s: return "S";
        case SequenceId::t: return "T";
        case SequenceId::u: return "U";
        case SequenceId::v: return "V";
    }
    return "?";
}

inline std::optional<SequenceId> sequence_from_string(std::string_view name) {
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (up == "APERY") return SequenceId::apery;
    if (up == "DOMB") return SequenceId::domb;
    if (up == "S") return SequenceId::s;
    if (up == "T") return SequenceId::t;
    if (up == "U") return SequenceId::u;
    if (up == "V") return SequenceId::v;
    return std::nullopt;
}

// a_n = sum_k C(n,k)^2 C(n+k,k)^2
inline Rational apery(unsigned long n) {
    mpz_class sum(0);
    for (unsigned long k = 0; k <= n; ++k) {
        mpz_class t = binomial(n, k) * binomial(n + k, k);
        sum += t * t;
    }
    return Rational(sum);
}

// b_n = (-1)^n sum_k C(n,k)^2 C(2k,k) C(2(n-k),n-k)
inline Rational domb(unsigned long n) {
    mpz_class sum(0);
    for (unsigned long k = 0; k <= n; ++k) {
        mpz_class c = binomial(n, k);
        sum += c * c * binomial(2 * k, k) * binomial(2 * (n - k), n - k);
    }
    if (n % 2 == 1) sum = -sum;
    return Rational(sum);
}

inline Rational s_closed(unsigned long n) {
    Rational p = rising_factorial(Rational(1, 4), n);
    return Rational::pow(Rational(64), n) * p * p /
           (Rational(factorial(n)) * Rational(factorial(n)));
}

// One step of s_{n+1} = 4 ((1+4n)/(1+n))^2 s_n.
inline Rational s_next(unsigned long n, const Rational& s_n) {
    Rational ratio(static_cast<long>(1 + 4 * n), static_cast<long>(1 + n));
    return s_n * Rational(4) * ratio * ratio;
}

inline Rational t_closed(unsigned long n) {
    return Rational::pow(Rational(108), n) * rising_factorial(Rational(1, 6), n) *
           rising_factorial(Rational(1, 3), n) /
           (Rational(factorial(n)) * Rational(factorial(n)));
}

// One step of t_{n+1} = 6 (1+6n)(1+3n)/(1+n)^2 t_n.
inline Rational t_next(unsigned long n, const Rational& t_n) {
    Rational num(static_cast<long>(1 + 6 * n));
    num *= Rational(static_cast<long>(1 + 3 * n));
    Rational den(static_cast<long>(1 + n));
    return t_n * Rational(6) * num / (den * den);
}

inline Rational u(unsigned long n) {
    return Rational::pow(Rational(64), n) * rising_factorial(Rational(1, 4), n) *
           rising_factorial(Rational(3, 4), n) /
           (Rational(factorial(n)) * Rational(factorial(n)));
}

inline Rational v(unsigned long n) {
    return Rational::pow(Rational(27), n) * rising_factorial(Rational(1, 3), n) *
           rising_factorial(Rational(2, 3), n) /
           (Rational(factorial(n)) * Rational(factorial(n)));
}

inline Rational u_next(unsigned long n, const Rational& u_n) {
    Rational num(static_cast<long>(4 * n + 1));
    num *= Rational(static_cast<long>(4 * n + 3));
    Rational den(static_cast<long>(n + 1));
    return u_n * Rational(4) * num / (den * den);
}

inline Rational v_next(unsigned long n, const Rational& v_n) {
    Rational num(static_cast<long>(3 * n + 1));
    num *= Rational(static_cast<long>(3 * n + 2));
    Rational den(static_cast<long>(n + 1));
    return v_n * Rational(3) * num / (den * den);
}

// p-step multiplier 4^p prod_{i=0}^{p-1} ((1+4(i+n))/(1+n+i))^2,
// so that s_{n+p} = multiplier * s_n.
inline Rational s_shift_product(unsigned long n, unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("s_shift_product: p must be prime");
    Rational prod(1);
    for (unsigned long i = 0; i < p; ++i) {
        Rational ratio(static_cast<long>(1 + 4 * (i + n)), static_cast<long>(1 + n + i));
        prod *= ratio * ratio;
    }
    return Rational::pow(Rational(4), p) * prod;
}

// p-step multiplier 6^p prod_{i=0}^{p-1} (1+6n+6i)(1+3n+3i)/(1+n+i)^2 for t.
inline Rational t_shift_product(unsigned long n, unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("t_shift_product: p must be prime");
    Rational prod(1);
    for (unsigned long i = 0; i < p; ++i) {
        Rational num(static_cast<long>(1 + 6 * n + 6 * i));
        num *= Rational(static_cast<long>(1 + 3 * n + 3 * i));
        Rational den(static_cast<long>(1 + n + i));
        prod *= num / (den * den);
    }
    return Rational::pow(Rational(6), p) * prod;
}

// Direct (non-memoized) evaluation of any sequence at one index.
inline Rational sequence_value(SequenceId id, unsigned long n) {
    switch (id) {
        case SequenceId::apery: return apery(n);
        case SequenceId::domb: return domb(n);
        case SequenceId::s: return s_closed(n);
        case SequenceId::t: return t_closed(n);
        case SequenceId::u: return u(n);
        case SequenceId::v: return v(n);
    }
    throw std::logic_error("sequence_value: bad id");
}

// Residue-class hypothesis under which the supercongruence a_{np} == a_n
// (mod p^r) is asserted. For u and v only the n = 1 instance is asserted;
// other n are exploratory.
struct TheoremProfile {
    unsigned long modulus;
    unsigned long residue;
    long default_r;
    bool general_n;
};

inline TheoremProfile theorem_profile(SequenceId id) {
    switch (id) {
        case SequenceId::apery: return {1, 0, 3, true};
        case SequenceId::domb: return {1, 0, 3, true};
        case SequenceId::s: return {4, 1, 2, true};
        case SequenceId::t: return {6, 1, 2, true};
        case SequenceId::u: return {1, 0, 2, false};
        case SequenceId::v: return {1, 0, 2, false};
    }
    throw std::logic_error("theorem_profile: bad id");
}

inline bool hypothesis_met(SequenceId id, unsigned long p, unsigned long n) {
    TheoremProfile prof = theorem_profile(id);
    if (p <= 3) return false;
    if (p % prof.modulus != prof.residue) return false;
    return prof.general_n || n == 1;
}

// Memoized exact values of one sequence, indices [0, size). Construction is
// single-writer; a fully built table is immutable and safe to read from any
// number of threads.
class SequenceTable {
public:
    explicit SequenceTable(SequenceId id) : id_(id) { values_.push_back(Rational(1)); }

    SequenceId id() const { return id_; }
    std::size_t size() const { return values_.size(); }

    const Rational& at(std::size_t n) const {
        if (n >= values_.size()) throw std::out_of_range("SequenceTable: index not built");
        return values_[n];
    }

    // Extends values through index n. s, t, u, v grow by their one-step
    // ratios and are cross-checked against the closed product form while the
    // indices are small; the binomial-sum sequences are recomputed per index.
    void extend_to(std::size_t n) {
        while (values_.size() <= n) {
            std::size_t k = values_.size();
            Rational next = step(k);
            if (k <= kCrossCheckLimit && uses_recurrence()) {
                if (next != sequence_value(id_, k))
                    throw std::logic_error("SequenceTable: recurrence/closed-form mismatch");
            }
            values_.push_back(std::move(next));
        }
    }

    // CSV export, columns: n, value (decimal string; num/den when fractional).
    void write_csv(std::ostream& os) const {
        os << "n,value\n";
        for (std::size_t n = 0; n < values_.size(); ++n)
            os << n << ',' << values_[n].to_string() << '\n';
    }

private:
    static constexpr std::size_t kCrossCheckLimit = 200;

    bool uses_recurrence() const {
        return id_ == SequenceId::s || id_ == SequenceId::t || id_ == SequenceId::u ||
               id_ == SequenceId::v;
    }

    Rational step(std::size_t k) const {
        const Rational& prev = values_.back();
        unsigned long m = static_cast<unsigned long>(k - 1);
        switch (id_) {
            case SequenceId::apery: return apery(static_cast<unsigned long>(k));
            case SequenceId::domb: return domb(static_cast<unsigned long>(k));
            case SequenceId::s: return s_next(m, prev);
            case SequenceId::t: return t_next(m, prev);
            case SequenceId::u: return u_next(m, prev);
            case SequenceId::v: return v_next(m, prev);
        }
        throw std::logic_error("SequenceTable: bad id");
    }

    SequenceId id_;
    std::vector<Rational> values_;
};

// Lazily built set of tables shared by the verification entry points.
class SequenceCache {
public:
    SequenceTable& table(SequenceId id) {
        auto it = tables_.find(id);
        if (it == tables_.end()) it = tables_.emplace(id, SequenceTable(id)).first;
        return it->second;
    }

private:
    std::map<SequenceId, SequenceTable> tables_;
};

}  // namespace supercon
