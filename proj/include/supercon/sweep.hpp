#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supercon/congruence.hpp"
#include "supercon/number_theory.hpp"
#include "supercon/parallel.hpp"
#include "supercon/sequences.hpp"

namespace supercon {

// Raised when a sweep would need table indices beyond the configured cap.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SupercongruenceCheck {
    bool verdict = false;
    Valuation valuation;
    bool hypothesis_met = false;
};

// Checks a_{np} == a_n (mod p^r) for one grid cell. Primes outside the
// sequence's residue class are evaluated all the same, just flagged; only
// p <= 3 is rejected.
inline SupercongruenceCheck check_supercongruence(SequenceCache& cache, SequenceId seq,
                                                  unsigned long n, unsigned long p, long r) {
    if (n == 0) throw std::invalid_argument("check_supercongruence: n must be positive");
    SequenceTable& table = cache.table(seq);
    table.extend_to(n * p);
    CongruenceResult res = congruent_mod(table.at(n * p), table.at(n), p, r);
    return SupercongruenceCheck{res.holds, res.valuation, hypothesis_met(seq, p, n)};
}

inline SupercongruenceCheck check_supercongruence(SequenceId seq, unsigned long n,
                                                  unsigned long p, long r) {
    SequenceCache cache;
    return check_supercongruence(cache, seq, n, p, r);
}

// C(pa, pb) == C(a, b) (mod p^3).
inline CongruenceResult kazandzidis_check(unsigned long a, unsigned long b, unsigned long p) {
    if (a < b) throw std::invalid_argument("kazandzidis_check: requires a >= b");
    return congruent_mod(Rational(binomial(p * a, p * b)), Rational(binomial(a, b)), p, 3);
}

struct SweepSpec {
    SequenceId sequence = SequenceId::s;
    long r = 2;
    std::vector<unsigned long> primes;  // realized set, ascending
    unsigned long n_max = 20;
    unsigned long index_cap = 5000;

    // Echo of how the prime set was produced (modulus 0 => explicit list).
    unsigned long prime_bound = 0;
    unsigned long modulus = 0;
    unsigned long residue = 0;

    static SweepSpec from_residue_class(SequenceId seq, long r, unsigned long bound,
                                        unsigned long modulus, unsigned long residue,
                                        unsigned long n_max, unsigned long index_cap = 5000) {
        SweepSpec spec;
        spec.sequence = seq;
        spec.r = r;
        spec.primes = prime_stream(bound, modulus, residue);
        spec.n_max = n_max;
        spec.index_cap = index_cap;
        spec.prime_bound = bound;
        spec.modulus = modulus;
        spec.residue = residue;
        return spec;
    }

    static SweepSpec from_primes(SequenceId seq, long r, std::vector<unsigned long> primes,
                                 unsigned long n_max, unsigned long index_cap = 5000) {
        for (unsigned long p : primes)
            if (p <= 3 || !is_prime(p))
                throw std::invalid_argument("SweepSpec: explicit primes must be primes > 3");
        SweepSpec spec;
        spec.sequence = seq;
        spec.r = r;
        spec.primes = std::move(primes);
        spec.n_max = n_max;
        spec.index_cap = index_cap;
        return spec;
    }
};

struct SweepRecord {
    SequenceId sequence;
    unsigned long prime = 0;
    unsigned long n = 0;
    unsigned long index = 0;  // n * p
    bool verdict = false;
    Valuation valuation;
    bool hypothesis_met = false;
};

struct SweepSummary {
    std::size_t records = 0;
    std::size_t failures = 0;  // false verdicts on hypothesis-satisfying cells
    std::size_t hypothesis_cells = 0;
    std::size_t exploratory_cells = 0;
    std::size_t exploratory_false = 0;
    std::optional<long> min_valuation;  // over finite valuations
};

struct SweepReport {
    SweepSpec spec;
    std::vector<SweepRecord> records;  // ordered by (prime, n)
    SweepSummary summary;
    double wall_time_ms = 0.0;
};

// Exhaustive (prime, n) grid evaluation. Cells are independent and evaluated
// concurrently; the report order is fixed by cell index, so identical specs
// produce identical reports (wall time aside).
inline SweepReport run_sweep(SequenceCache& cache, const SweepSpec& spec) {
    if (spec.r < 1) throw std::invalid_argument("run_sweep: r must be >= 1");
    if (spec.n_max == 0) throw std::invalid_argument("run_sweep: n_max must be positive");
    auto start = std::chrono::steady_clock::now();

    unsigned long max_index = 0;
    for (unsigned long p : spec.primes)
        if (spec.n_max * p > max_index) max_index = spec.n_max * p;
    if (max_index > spec.index_cap)
        throw ResourceLimitError("run_sweep: required table index " + std::to_string(max_index) +
                                 " exceeds cap " + std::to_string(spec.index_cap));

    // Single-writer extension; the parallel phase below only reads.
    SequenceTable& table = cache.table(spec.sequence);
    table.extend_to(max_index);

    SweepReport report;
    report.spec = spec;
    report.records.resize(spec.primes.size() * spec.n_max);
    parallel_for_index(report.records.size(), [&](std::size_t cell) {
        unsigned long p = spec.primes[cell / spec.n_max];
        unsigned long n = 1 + cell % spec.n_max;
        CongruenceResult res = congruent_mod(table.at(n * p), table.at(n), p, spec.r);
        report.records[cell] = SweepRecord{spec.sequence, p,          n,
                                           n * p,         res.holds,  res.valuation,
                                           hypothesis_met(spec.sequence, p, n)};
    });

    SweepSummary& sum = report.summary;
    sum.records = report.records.size();
    for (const SweepRecord& rec : report.records) {
        if (rec.hypothesis_met) {
            ++sum.hypothesis_cells;
            if (!rec.verdict) ++sum.failures;
        } else {
            ++sum.exploratory_cells;
            if (!rec.verdict) ++sum.exploratory_false;
        }
        if (!rec.valuation.infinite)
            if (!sum.min_valuation || rec.valuation.value < *sum.min_valuation)
                sum.min_valuation = rec.valuation.value;
    }

    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

inline SweepReport run_sweep(const SweepSpec& spec) {
    SequenceCache cache;
    return run_sweep(cache, spec);
}

}  // namespace supercon
