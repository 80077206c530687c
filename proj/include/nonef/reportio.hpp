#pragma once

// Structured-text (key/value, UTF-8) serialization of certificates and
// replay reports, plus the re-verification entry point used by the CLI.
//
// Documents are deterministic given their embedded (seed, primes): verify
// re-executes from those and compares the regenerated document line by
// line, ignoring only elapsed timing.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonef/oracle.hpp"
#include "nonef/replay.hpp"

namespace nonef {

struct KvDoc {
    std::string header;
    std::vector<std::pair<std::string, std::string>> fields;

    void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
    // First value for the key; throws std::invalid_argument when missing.
    const std::string& get(const std::string& key) const;
    std::optional<std::string> get_opt(const std::string& key) const;
    std::vector<std::string> get_all(const std::string& key) const;

    std::string to_text() const;
    static KvDoc from_text(const std::string& text);
};

// Atomic write (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// ---------------------------------------------------------------------------
// problems
// ---------------------------------------------------------------------------

// Canonical problem lines (consecutive equal conditions compressed with
// "xN"); inverse of parse_problem_lines.
std::vector<std::pair<std::string, std::string>> problem_to_fields(
    const InterpolationProblem& problem);
InterpolationProblem problem_from_fields(const KvDoc& doc);

// Standalone problem file for the `dim` command: one directive per line
// ("degree", "model", "ordinary", "oncurve", "chain", "witness"), '#'
// comments allowed.
InterpolationProblem parse_problem_file(const std::string& text);

// ---------------------------------------------------------------------------
// documents
// ---------------------------------------------------------------------------

struct RunConfig {
    u64 seed = 0;
    int primes = 3;
    int retries = 2;
    std::string out;  // output path as requested ("" = stdout only)
    bool quiet = false;
};

OracleOptions oracle_options(const RunConfig& cfg);

KvDoc certificate_doc(const InterpolationProblem& problem, const RunConfig& cfg,
                      const OracleResult& result, const std::string& class_line = "");

KvDoc replay_doc(const ReplayReport& report, bool lemma_inline);
KvDoc lemma_doc(const LemmaReport& report);

// Re-executes the document from its embedded parameters and compares the
// regenerated document, ignoring elapsed_ms.  Returns the first divergence
// as "key: got ... expected ..." or nullopt on an exact match.
std::optional<std::string> verify_document(const std::string& text);

}  // namespace nonef
