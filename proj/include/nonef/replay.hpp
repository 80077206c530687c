#pragma once

// Machine-checked replay of the degeneration arguments: the m = 2 analysis
// over all twists, the t = 0 special case, the specialized uniqueness check
// (oracle-backed at desk scale), the induction for m > 2, and the pencil /
// unique-cubic dimension facts.
//
// Every arithmetic identity appears as a Computed step whose two sides are
// derived independently (operations on one side, the closed-form display on
// the other).  Steps whose justification is genuinely external to lattice
// arithmetic are recorded as Cited with a stable anchor slug, so reports
// are honest about what was recomputed versus assumed.

#include <string>
#include <vector>

#include "nonef/degeneration.hpp"
#include "nonef/lattice.hpp"
#include "nonef/oracle.hpp"

namespace nonef {

enum class StepKind { Computed, Cited };
enum class StepStatus { Ok, Failed, Unverified };

struct ReplayStep {
    StepKind kind = StepKind::Computed;
    StepStatus status = StepStatus::Ok;
    std::string name;    // stable slug, e.g. "line-splitting"
    std::string detail;  // deterministic rendering of the two sides
    i64 twist = -1;      // the t this step belongs to; -1 = global
};

struct ReplayReport {
    std::string mode;  // "m2" | "induction" | "bc"
    i64 d = 0, m = 0, k = 0;
    bool used_oracle = false;
    u64 seed = 0;
    int primes = 0;
    std::vector<ReplayStep> steps;

    bool all_verified() const;
    int first_bad_step() const;  // -1 when none
    std::string conclusion() const;
};

struct ReplayOptions {
    // Replace the Cited uniqueness step by an inline oracle run when the
    // parameters are desk-scale (n <= 4, t <= 2).
    bool lemma_inline = false;
    OracleOptions oracle;
};

// The m = 2 degeneration for all twists 0 <= t <= k/n, n = d-1.
// Pure lattice/Cremona arithmetic unless lemma_inline is set.
ReplayReport replay_m2(i64 d, i64 k, const ReplayOptions& opt = {});

// Induction for m >= 3: recurses through m-2 and bottoms out in the m = 2
// replay and the oracle-checked pencil facts.
ReplayReport replay_induction(i64 d, i64 m, i64 k, const ReplayOptions& opt = {});

// Oracle-verified dimension statements: dim(k xi_{d,1}) = k,
// dim(xi_{d,0}) = d, and for d = 3 the unique-cubic multiples.
ReplayReport check_theorem_bc(i64 d, i64 k, const OracleOptions& opts);

// ---------------------------------------------------------------------------
// specialized uniqueness check
// ---------------------------------------------------------------------------

enum class LemmaOutcome { Verified, Unverified, Failed };

struct LemmaSplit {
    bool base_locus = false;   // the model curve is a fixed component
    i64 residual_degree = 0;   // degree after removing it once
};

struct LemmaReport {
    i64 n = 0, t = 0;
    u64 seed = 0;
    int primes = 0;
    u64 prime = 0;
    i64 dim_upper = -1, dim_lower = -1;
    Verdict dim_verdict = Verdict::Inconclusive;
    std::vector<LemmaSplit> splits;
    LemmaOutcome outcome = LemmaOutcome::Failed;

    bool verified() const { return outcome == LemmaOutcome::Verified; }
    // "tT" when verified: the unique member is the t-fold model curve.
    std::string member() const;
};

// Builds the degree-(n+1) model curve T, assembles the specialized system
// of degree t(n+1) with n-1 chains [t^(n-1)] on T and 4n points of
// multiplicity t on T, checks dim <= 0, and splits T off t times; the
// residual must be empty.  Desk scale: n in {2,3,4}, t in {1,2}.
// Oracle Inconclusive propagates as Unverified, never as Failed.
LemmaReport verify_lemma(i64 n, i64 t, const OracleOptions& opts);

// The specialized interpolation problem the check runs on, exposed for
// tests and the dim command.
InterpolationProblem lemma_problem(i64 n, i64 t);

}  // namespace nonef
