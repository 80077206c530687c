#pragma once

// Exact emptiness/dimension certificates for linear systems of plane curves
// with fat-point conditions, by modular rank at a random specialization.
//
// Semantics of the sandwich: specializing (random points, reduction mod p)
// can only lower the rank of the interpolation matrix, so
//   dim_upper = monomials - rank - 1
// bounds the generic projective dimension from above, while the virtual
// dimension bounds it from below.  Full column rank is therefore a true
// certificate of generic emptiness; a gap between the bounds is reported
// as Inconclusive, never guessed.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nonef/lattice.hpp"
#include "nonef/matrix.hpp"
#include "nonef/modarith.hpp"
#include "nonef/modelcurve.hpp"
#include "nonef/monomials.hpp"

namespace nonef {

enum class CondKind { Ordinary, OnCurve, Chain };

struct PointCondition {
    CondKind kind = CondKind::Ordinary;
    i64 h = 1;          // multiplicity
    i64 m = 1;          // chain length: [h^m] along the carrier curve
    std::string curve;  // carrier for OnCurve/Chain

    // Linear conditions contributed: m*h(h+1)/2 for a chain, h(h+1)/2 else.
    i64 rows() const { return (kind == CondKind::Chain ? m : 1) * (h * (h + 1) / 2); }

    bool operator==(const PointCondition&) const = default;
};

// File-expressible model curve generators.
enum class ModelKind {
    LineImage,        // image of a general line under n quadratic maps
    ThroughOrdinary,  // curve of given degree through the problem's ordinary points
    ThroughRandom,    // curve of given degree through its own fresh random points
};

struct ModelCurveSpec {
    std::string name;
    ModelKind kind = ModelKind::LineImage;
    i64 n = 2;       // LineImage
    i64 degree = 2;  // ThroughOrdinary / ThroughRandom

    bool operator==(const ModelCurveSpec&) const = default;
};

// Optional explicit-member hook: the affine equation of a named model
// curve, raised to `power`, is offered as a member; the oracle accepts it
// only if it is nonzero and annihilated by every condition row, and then
// raises dim_lower to 0.
struct WitnessSpec {
    std::string curve;  // empty = no witness
    i64 power = 1;

    bool enabled() const { return !curve.empty(); }
    bool operator==(const WitnessSpec&) const = default;
};

struct InterpolationProblem {
    i64 degree = 0;
    std::vector<PointCondition> conditions;
    std::vector<ModelCurveSpec> models;
    WitnessSpec witness;

    i64 coefficients() const { return monomial_count(degree); }
    i64 total_rows() const;
    i64 virtual_dimension() const { return coefficients() - 1 - total_rows(); }

    bool operator==(const InterpolationProblem&) const = default;
};

enum class Verdict { EmptyCertified, DimExact, Inconclusive };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct RankCertificate {
    u64 prime = 0;
    u64 seed = 0;
    i64 monomials = 0;
    i64 condition_rows = 0;
    i64 rank = 0;
    i64 dim_upper = -1;
    i64 dim_lower = -1;
    Verdict verdict = Verdict::Inconclusive;
    i64 elapsed_ms = 0;
};

struct PrimeRun {
    u64 prime = 0;
    i64 rank = 0;
    i64 dim_upper = -1;
};

struct OracleResult {
    RankCertificate cert;  // primary prime of the first attempt
    std::vector<PrimeRun> runs;
    bool witness_accepted = false;
};

struct OracleOptions {
    u64 seed = 0;
    int primes = 3;
    int retries = 2;
    ThreadPool* pool = nullptr;
};

// ---------------------------------------------------------------------------
// assembly
// ---------------------------------------------------------------------------

struct SampledCondition {
    PointCondition cond;
    u64 x = 0, y = 0;  // the point
    u64 param = 0;     // parameter on the carrier curve, when applicable
};

struct Assembled {
    Matrix matrix;
    std::vector<SampledCondition> samples;
    std::map<std::string, ModelCurve> curves;
    int chain_trunc = 0;
};

// Deterministic given (prime, seed): ordinary points, model construction
// and per-curve sampling each draw from their own derived streams, so
// appending conditions never disturbs earlier samples.  Requires
// prime > 2 * degree * max multiplicity.
Assembled assemble(const InterpolationProblem& problem, u64 prime, u64 seed, int trunc_extra = 0);

// The witness coefficient vector for `spec` over the assembled data, or
// nullopt if it cannot be built (wrong degrees, missing curve, degenerate
// kernel).
std::optional<std::vector<u64>> build_witness(const InterpolationProblem& problem,
                                              const Assembled& asmb, u64 prime);

// ---------------------------------------------------------------------------
// verdicts
// ---------------------------------------------------------------------------

OracleResult dimension(const InterpolationProblem& problem, const OracleOptions& opts);

// True iff one additional simple point at a fresh parameter of the named
// carrier curve leaves dim_upper unchanged.  Requires the system to be
// nonempty at the specialization.
bool base_locus_contains(const InterpolationProblem& problem, const std::string& curve,
                         const OracleOptions& opts);

// ---------------------------------------------------------------------------
// class -> problem
// ---------------------------------------------------------------------------

// All-ordinary interpolation problem of a divisor class: degree plus one
// ordinary condition per positive multiplicity.
InterpolationProblem problem_of_class(const DivisorClass& cls);

}  // namespace nonef
