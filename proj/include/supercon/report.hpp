#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "supercon/lemmas.hpp"
#include "supercon/qseries.hpp"
#include "supercon/sweep.hpp"

namespace supercon {

using Json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Valuations serialize as plain integers, with the infinite valuation of an
// exact-zero difference encoded as the string "inf".
inline Json valuation_json(const Valuation& v) {
    if (v.infinite) return Json("inf");
    return Json(v.value);
}

inline Json to_json(const SweepRecord& rec) {
    Json j;
    j["check"] = "supercongruence";
    j["sequence"] = std::string(to_string(rec.sequence));
    j["prime"] = rec.prime;
    j["n"] = rec.n;
    j["index"] = rec.index;
    j["verdict"] = rec.verdict;
    j["valuation"] = valuation_json(rec.valuation);
    j["hypothesis_met"] = rec.hypothesis_met;
    return j;
}

inline Json to_json(const SweepReport& report) {
    Json spec;
    spec["sequence"] = std::string(to_string(report.spec.sequence));
    spec["r"] = report.spec.r;
    spec["n_max"] = report.spec.n_max;
    spec["index_cap"] = report.spec.index_cap;
    spec["prime_bound"] = report.spec.prime_bound;
    spec["modulus"] = report.spec.modulus;
    spec["residue"] = report.spec.residue;
    spec["primes"] = report.spec.primes;

    Json records = Json::array();
    for (const SweepRecord& rec : report.records) records.push_back(to_json(rec));

    Json summary;
    summary["records"] = report.summary.records;
    summary["failures"] = report.summary.failures;
    summary["hypothesis_cells"] = report.summary.hypothesis_cells;
    summary["exploratory_cells"] = report.summary.exploratory_cells;
    summary["exploratory_false"] = report.summary.exploratory_false;
    if (report.summary.min_valuation)
        summary["min_valuation"] = *report.summary.min_valuation;
    else
        summary["min_valuation"] = nullptr;

    Json j;
    j["spec"] = std::move(spec);
    j["records"] = std::move(records);
    j["summary"] = std::move(summary);
    j["wall_time_ms"] = report.wall_time_ms;
    return j;
}

inline Json to_json(const NamedCheck& check) {
    Json j;
    j["check"] = check.name;
    j["prime"] = check.prime;
    j["n"] = check.n;
    j["verdict"] = check.result.holds;
    j["valuation"] = valuation_json(check.result.valuation);
    j["hypothesis_met"] = true;  // guards reject out-of-class primes outright
    return j;
}

inline const char* csv_header() {
    return "check,sequence,prime,n,index,verdict,valuation,hypothesis_met\n";
}

inline void write_csv_row(std::ostream& os, const SweepRecord& rec) {
    os << "supercongruence," << to_string(rec.sequence) << ',' << rec.prime << ',' << rec.n
       << ',' << rec.index << ',' << (rec.verdict ? "true" : "false") << ','
       << rec.valuation.to_string() << ',' << (rec.hypothesis_met ? "true" : "false") << '\n';
}

inline void write_csv_row(std::ostream& os, const NamedCheck& check) {
    os << check.name << ",," << check.prime << ',' << check.n << ",,"
       << (check.result.holds ? "true" : "false") << ',' << check.result.valuation.to_string()
       << ",true\n";
}

inline void write_sweep_csv(std::ostream& os, const SweepReport& report) {
    os << csv_header();
    for (const SweepRecord& rec : report.records) write_csv_row(os, rec);
}

// Writes via a temporary file and rename, so readers never observe a
// partially written report.
inline void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError("cannot open '" + tmp + "' for writing");
        os << content;
        os.flush();
        if (!os) throw IoError("write to '" + tmp + "' failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot rename '" + tmp + "' to '" + path + "'");
    }
}

}  // namespace supercon
