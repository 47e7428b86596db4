// verify: exact computation of the six sequences and batch verification of
// their supercongruences, the supporting product/harmonic identities, and the
// q-series re-derivations.
//
// Subcommands:
//   verify sweep    --seq S [--r 2] [--prime-bound 97 | --primes 5,13] ...
//   verify lemma    --name lemma51 [--p 7] [--prime-bound 97] [--n-max 10]
//   verify qseries  [--count 12] [--trunc 32] [--dump Z2]
//   verify all
//
// Exit codes: 0 all verified, 1 verification failure, 2 usage error,
// 3 resource cap exceeded, 4 I/O failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "supercon/report.hpp"

namespace {

using namespace supercon;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;

struct OutputOptions {
    std::string path;    // empty => stdout
    std::string format;  // "json" or "csv"
};

void emit(const OutputOptions& out, const std::string& content) {
    if (out.path.empty()) {
        std::cout << content;
        if (!std::cout) throw IoError("write to stdout failed");
    } else {
        write_file_atomic(out.path, content);
    }
}

SequenceId parse_sequence(const std::string& name) {
    auto id = sequence_from_string(name);
    if (!id)
        throw CLI::ValidationError("--seq",
                                   "unknown sequence '" + name +
                                       "' (valid: APERY, DOMB, S, T, U, V)");
    return *id;
}

int run_sweep_command(const std::string& seq_name, std::optional<long> r_opt,
                      unsigned long prime_bound, std::optional<unsigned long> modulus_opt,
                      std::optional<unsigned long> residue_opt,
                      const std::vector<unsigned long>& explicit_primes, unsigned long n_max,
                      unsigned long index_cap, bool explore, const OutputOptions& out,
                      SequenceCache& cache, Json* suite_sink) {
    SequenceId seq = parse_sequence(seq_name);
    TheoremProfile prof = theorem_profile(seq);
    long r = r_opt.value_or(prof.default_r);

    SweepSpec spec;
    if (!explicit_primes.empty()) {
        spec = SweepSpec::from_primes(seq, r, explicit_primes, n_max, index_cap);
    } else {
        unsigned long modulus = modulus_opt.value_or(prof.modulus);
        unsigned long residue = residue_opt.value_or(prof.residue % prof.modulus);
        spec = SweepSpec::from_residue_class(seq, r, prime_bound, modulus, residue, n_max,
                                             index_cap);
    }

    // The realized prime set must sit inside the sequence's residue class
    // unless the caller explicitly asked for an exploratory run.
    if (!explore)
        for (unsigned long p : spec.primes)
            if (p % prof.modulus != prof.residue)
                throw CLI::ValidationError(
                    "--residue",
                    "prime " + std::to_string(p) + " is outside the hypothesis class of " +
                        std::string(to_string(seq)) + " (p == " + std::to_string(prof.residue) +
                        " mod " + std::to_string(prof.modulus) + "); pass --explore to probe it");

    SweepReport report = run_sweep(cache, spec);
    if (suite_sink) {
        Json j;
        j["suite"] = "sweep." + std::string(to_string(seq));
        j["report"] = to_json(report);
        suite_sink->push_back(std::move(j));
    } else if (out.format == "csv") {
        std::ostringstream os;
        write_sweep_csv(os, report);
        emit(out, os.str());
    } else {
        emit(out, to_json(report).dump(2) + "\n");
    }
    return report.summary.failures == 0 ? kExitOk : kExitFailure;
}

int run_lemma_command(const std::string& name, std::optional<unsigned long> p_opt,
                      unsigned long prime_bound, unsigned long n_max,
                      std::optional<unsigned long> i_opt, const OutputOptions& out,
                      Json* suite_sink) {
    const LemmaInfo* info = lemma_lookup(name);
    if (!info) {
        std::string names;
        for (const LemmaInfo& li : lemma_catalog()) {
            if (!names.empty()) names += ", ";
            names += li.name;
        }
        throw CLI::ValidationError("--name",
                                   "unknown check '" + name + "' (valid: " + names + ")");
    }

    std::vector<NamedCheck> records;
    if (p_opt) {
        if (name == "pairing" && i_opt) {
            records.push_back({"pairing", *p_opt, *i_opt,
                               pairing_identity_check(*i_opt, *p_opt)});
        } else {
            records = run_lemma(name, *p_opt, n_max);
        }
    } else {
        for (unsigned long p : prime_stream(prime_bound, info->modulus, 1)) {
            std::vector<NamedCheck> chunk = run_lemma(name, p, n_max);
            records.insert(records.end(), chunk.begin(), chunk.end());
        }
    }

    std::size_t failures = 0;
    Json rows = Json::array();
    for (const NamedCheck& rec : records) {
        if (!rec.result.holds) ++failures;
        rows.push_back(to_json(rec));
    }
    Json j;
    j["check"] = name;
    j["records"] = std::move(rows);
    j["summary"] = Json{{"records", records.size()}, {"failures", failures}};

    if (suite_sink) {
        Json wrap;
        wrap["suite"] = "lemma." + name;
        wrap["report"] = std::move(j);
        suite_sink->push_back(std::move(wrap));
    } else if (out.format == "csv") {
        std::ostringstream os;
        os << csv_header();
        for (const NamedCheck& rec : records) write_csv_row(os, rec);
        emit(out, os.str());
    } else {
        emit(out, j.dump(2) + "\n");
    }
    return failures == 0 ? kExitOk : kExitFailure;
}

Json block_json(const CrossCheckBlock& block, std::size_t count) {
    Json j;
    j["sequence"] = std::string(to_string(block.sequence));
    j["count"] = count;
    j["match"] = block.match;
    if (!block.note.empty()) j["note"] = block.note;
    Json expanded = Json::array(), direct = Json::array();
    for (const Rational& x : block.expanded) expanded.push_back(x.to_string());
    for (const Rational& x : block.direct) direct.push_back(x.to_string());
    j["expanded"] = std::move(expanded);
    j["direct"] = std::move(direct);
    return j;
}

int run_qseries_command(std::size_t count, std::size_t trunc, const std::string& dump_name,
                        std::size_t transform_order, const OutputOptions& out,
                        Json* suite_sink) {
    if (!dump_name.empty()) {
        auto series = named_series(dump_name, trunc);
        if (!series)
            throw CLI::ValidationError(
                "--dump", "unknown series '" + dump_name +
                              "' (valid: Z, X, ZD, XD, Z2, X2, Z3, X3)");
        std::ostringstream os;
        write_series_csv(os, *series);
        emit(out, os.str());
        return kExitOk;
    }

    std::size_t failures = 0;
    Json blocks = Json::array();
    for (SequenceId id :
         {SequenceId::apery, SequenceId::domb, SequenceId::s, SequenceId::t}) {
        CrossCheckBlock block = qseries_cross_check(id, count, trunc);
        if (!block.match) ++failures;
        blocks.push_back(block_json(block, count));
    }
    bool kummer_ok = kummer_transformation_check(transform_order);
    bool cubic_ok = cubic_transformation_check(transform_order);
    if (!kummer_ok) ++failures;
    if (!cubic_ok) ++failures;

    Json j;
    j["blocks"] = std::move(blocks);
    j["transformations"] =
        Json{{"order", transform_order}, {"kummer", kummer_ok}, {"cubic", cubic_ok}};
    j["failures"] = failures;

    if (suite_sink) {
        Json wrap;
        wrap["suite"] = "qseries";
        wrap["report"] = std::move(j);
        suite_sink->push_back(std::move(wrap));
    } else {
        emit(out, j.dump(2) + "\n");
    }
    return failures == 0 ? kExitOk : kExitFailure;
}

int run_all_command(const OutputOptions& out) {
    SequenceCache cache;
    Json suites = Json::array();
    OutputOptions discard;
    int worst = kExitOk;
    auto merge = [&worst](int code) {
        if (code != kExitOk) worst = kExitFailure;
    };

    merge(run_sweep_command("S", std::nullopt, 97, std::nullopt, std::nullopt, {}, 20, 5000,
                            false, discard, cache, &suites));
    merge(run_sweep_command("T", std::nullopt, 97, std::nullopt, std::nullopt, {}, 20, 5000,
                            false, discard, cache, &suites));
    for (const char* seq : {"APERY", "DOMB"})
        merge(run_sweep_command(seq, std::nullopt, 0, std::nullopt, std::nullopt,
                                {5, 7, 11, 13}, 8, 5000, false, discard, cache, &suites));
    for (const char* seq : {"U", "V"})
        merge(run_sweep_command(seq, std::nullopt, 97, std::nullopt, std::nullopt, {}, 20,
                                5000, false, discard, cache, &suites));
    for (const LemmaInfo& info : lemma_catalog())
        merge(run_lemma_command(info.name, std::nullopt, 101, 10, std::nullopt, discard,
                                &suites));
    merge(run_qseries_command(12, 32, "", 24, discard, &suites));

    std::size_t failures = 0;
    for (const Json& suite : suites) {
        const Json& rep = suite.at("report");
        if (rep.contains("summary"))
            failures += rep.at("summary").at("failures").get<std::size_t>();
        else if (rep.contains("failures"))
            failures += rep.at("failures").get<std::size_t>();
    }
    Json j;
    j["suites"] = std::move(suites);
    j["failures"] = failures;
    emit(out, j.dump(2) + "\n");
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of sequence supercongruences"};
    app.require_subcommand(1);

    OutputOptions out;
    out.format = "json";
    auto add_output_options = [&out](CLI::App* cmd) {
        cmd->add_option("--out", out.path, "write the report to this path (default: stdout)");
        cmd->add_option("--format", out.format, "report format")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    // sweep
    std::string seq_name;
    std::optional<long> r_opt;
    unsigned long prime_bound = 97;
    std::optional<unsigned long> modulus_opt, residue_opt;
    std::vector<unsigned long> explicit_primes;
    unsigned long n_max = 20;
    unsigned long index_cap = 5000;
    bool explore = false;
    CLI::App* sweep = app.add_subcommand("sweep", "grid-verify a_{np} == a_n (mod p^r)");
    sweep->add_option("--seq", seq_name, "sequence: APERY, DOMB, S, T, U, V")->required();
    sweep->add_option("--r", r_opt, "congruence exponent (default: per-sequence)");
    sweep->add_option("--prime-bound", prime_bound, "largest prime in the sweep");
    sweep->add_option("--modulus", modulus_opt, "residue-class modulus for primes");
    sweep->add_option("--residue", residue_opt, "residue for the prime class");
    sweep->add_option("--primes", explicit_primes, "explicit comma-separated prime list")
        ->delimiter(',');
    sweep->add_option("--n-max", n_max, "largest base index n");
    sweep->add_option("--index-cap", index_cap, "largest table index np allowed");
    sweep->add_flag("--explore", explore, "permit primes outside the hypothesis class");
    add_output_options(sweep);

    // lemma
    std::string lemma_name;
    std::optional<unsigned long> p_opt;
    unsigned long lemma_n_max = 10;
    std::optional<unsigned long> i_opt;
    unsigned long lemma_bound = 97;
    CLI::App* lemma = app.add_subcommand("lemma", "run a named identity check");
    lemma->add_option("--name", lemma_name, "check name (see docs)")->required();
    lemma->add_option("--p", p_opt, "single prime (default: all qualifying primes)");
    lemma->add_option("--prime-bound", lemma_bound, "prime bound when --p is omitted");
    lemma->add_option("--n-max", lemma_n_max, "index range for F/AB/G checks");
    lemma->add_option("--i", i_opt, "single pairing index");
    add_output_options(lemma);

    // qseries
    std::size_t count = 12;
    std::size_t trunc = 32;
    std::string dump_name;
    std::size_t transform_order = 24;
    CLI::App* qseries = app.add_subcommand("qseries", "re-derive sequences from expansions");
    qseries->add_option("--count", count, "number of expansion coefficients to cross-check");
    qseries->add_option("--trunc", trunc, "series truncation order");
    qseries->add_option("--dump", dump_name, "dump a named series as CSV instead");
    qseries->add_option("--transform-order", transform_order,
                        "order for the 2F1 transformation checks");
    add_output_options(qseries);

    // table
    std::string table_seq;
    unsigned long table_n_max = 20;
    CLI::App* table = app.add_subcommand("table", "export exact sequence values as CSV");
    table->add_option("--seq", table_seq, "sequence: APERY, DOMB, S, T, U, V")->required();
    table->add_option("--n-max", table_n_max, "largest index to export");
    add_output_options(table);

    // all
    CLI::App* all = app.add_subcommand("all", "run the full default verification suite");
    add_output_options(all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sweep->parsed()) {
            SequenceCache cache;
            return run_sweep_command(seq_name, r_opt, prime_bound, modulus_opt, residue_opt,
                                     explicit_primes, n_max, index_cap, explore, out, cache,
                                     nullptr);
        }
        if (lemma->parsed()) {
            if (p_opt && (*p_opt <= 3 || !is_prime(*p_opt))) {
                std::cerr << "error: --p must be a prime > 3\n";
                return kExitUsage;
            }
            return run_lemma_command(lemma_name, p_opt, lemma_bound, lemma_n_max, i_opt, out,
                                     nullptr);
        }
        if (qseries->parsed())
            return run_qseries_command(count, trunc, dump_name, transform_order, out, nullptr);
        if (table->parsed()) {
            SequenceTable seq_table(parse_sequence(table_seq));
            seq_table.extend_to(table_n_max);
            std::ostringstream os;
            seq_table.write_csv(os);
            emit(out, os.str());
            return kExitOk;
        }
        if (all->parsed()) return run_all_command(out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResidueClassError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
