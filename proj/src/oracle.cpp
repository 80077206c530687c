#include "nonef/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "nonef/series.hpp"

namespace nonef {

using namespace fp;

i64 InterpolationProblem::total_rows() const {
    i64 acc = 0;
    for (const auto& c : conditions) acc = checked_add(acc, c.rows());
    return acc;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::EmptyCertified: return "EmptyCertified";
        case Verdict::DimExact: return "DimExact";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "EmptyCertified") return Verdict::EmptyCertified;
    if (s == "DimExact") return Verdict::DimExact;
    if (s == "Inconclusive") return Verdict::Inconclusive;
    throw std::invalid_argument("unknown verdict \"" + s + "\"");
}

namespace {

struct BinomTable {
    std::vector<std::vector<u64>> c;

    BinomTable(int n, u64 p) : c(n + 1, std::vector<u64>(n + 1, 0)) {
        for (int i = 0; i <= n; ++i) {
            c[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                c[i][j] = add_mod(c[i - 1][j - 1], j <= i - 1 ? c[i - 1][j] : 0, p);
        }
    }
};

// Rows of an ordinary multiplicity-h condition at (x0, y0): the Taylor
// coefficients [u^a v^b] F(x0+u, y0+v) for a+b < h, ordered by total order
// then descending a.
void emit_ordinary_rows(Matrix& mat, std::size_t& next_row, i64 degree, u64 x0, u64 y0, i64 h,
                        const BinomTable& binom, u64 p) {
    auto pairs = monomial_pairs(static_cast<int>(degree));
    std::vector<u64> xpow(degree + 1, 1), ypow(degree + 1, 1);
    for (i64 e = 1; e <= degree; ++e) {
        xpow[e] = mul_mod(xpow[e - 1], x0, p);
        ypow[e] = mul_mod(ypow[e - 1], y0, p);
    }
    for (i64 s = 0; s < h; ++s) {
        for (i64 a = s; a >= 0; --a) {
            i64 b = s - a;
            u64* row = mat.row(next_row++);
            for (std::size_t cidx = 0; cidx < pairs.size(); ++cidx) {
                auto [i, j] = pairs[cidx];
                if (i < a || j < b) continue;
                u64 v = mul_mod(binom.c[i][a], binom.c[j][b], p);
                v = mul_mod(v, xpow[i - a], p);
                v = mul_mod(v, ypow[j - b], p);
                row[cidx] = v;
            }
        }
    }
}

// Chain [h^m] along the branch of the carrier at a smooth point.  Local
// coordinates (u, w): u the branch parameter, w a transverse direction, so
// the branch is w = 0 exactly.  The monomial jets are recursively pushed
// through the blow-up substitution (u, w) -> (u, u*w) and divided by u^h;
// at each of the m stages the jet coefficients of total order < h are the
// condition rows.
void emit_chain_rows(Matrix& mat, std::size_t& next_row, i64 degree, const ModelCurve& curve,
                     const CurvePoint& at, i64 h, i64 m, int trunc, u64 p) {
    auto [bx, by] = curve.branch_series(at, static_cast<std::size_t>(trunc) + 1);
    // transverse direction: not parallel to the branch tangent
    u64 tx = bx.c.size() > 1 ? bx.c[1] : 0;
    u64 alpha = 0, beta = 1;
    if (tx == 0) {
        alpha = 1;
        beta = 0;
    }
    BiSeries xs = bi_from_u_series(bx, alpha, trunc, p);
    BiSeries ys = bi_from_u_series(by, beta, trunc, p);

    auto pairs = monomial_pairs(static_cast<int>(degree));
    // jet of every monomial x^i y^j
    std::vector<BiSeries> jets(pairs.size());
    std::vector<BiSeries> xp(degree + 1), yp(degree + 1);
    xp[0] = yp[0] = bi_one(trunc);
    for (i64 e = 1; e <= degree; ++e) {
        xp[e] = bi_mul(xp[e - 1], xs, p);
        yp[e] = bi_mul(yp[e - 1], ys, p);
    }
    for (std::size_t cidx = 0; cidx < pairs.size(); ++cidx)
        jets[cidx] = bi_mul(xp[pairs[cidx].first], yp[pairs[cidx].second], p);

    auto blowdown = [&](const BiSeries& g) {
        // [u^a w^b] g' = [u^(a+h-b) w^b] g
        BiSeries out(g.trunc);
        for (int s = 0; s <= g.trunc; ++s)
            for (int b = 0; b <= s; ++b) {
                int a = s - b;
                out.set(a, b, g.get(a + static_cast<int>(h) - b, b));
            }
        return out;
    };

    for (i64 stage = 0; stage < m; ++stage) {
        if (stage > 0)
            for (auto& j : jets) j = blowdown(j);
        for (i64 s = 0; s < h; ++s)
            for (i64 a = s; a >= 0; --a) {
                i64 b = s - a;
                u64* row = mat.row(next_row++);
                for (std::size_t cidx = 0; cidx < pairs.size(); ++cidx)
                    row[cidx] = jets[cidx].get(static_cast<int>(a), static_cast<int>(b));
            }
    }
}

u64 max_multiplicity(const InterpolationProblem& problem) {
    u64 mx = 1;
    for (const auto& c : problem.conditions) mx = std::max<u64>(mx, static_cast<u64>(c.h));
    return mx;
}

u64 attempt_seed(u64 seed, int attempt) {
    if (attempt == 0) return seed;
    u64 st = seed + 0xa0761d6478bd642fULL * static_cast<u64>(attempt);
    return splitmix64(st);
}

}  // namespace

Assembled assemble(const InterpolationProblem& problem, u64 prime, u64 seed, int trunc_extra) {
    if (problem.degree < 0) throw std::domain_error("assemble: negative degree");
    if (!is_prime(prime)) throw std::domain_error("assemble: modulus is not prime");
    if (prime <= 2 * static_cast<u64>(problem.degree) * max_multiplicity(problem))
        throw std::domain_error("assemble: prime too small for derivative conditions");
    for (const auto& c : problem.conditions) {
        if (c.h < 1) throw std::domain_error("assemble: multiplicity must be >= 1");
        if (c.kind == CondKind::Chain && c.m < 1)
            throw std::domain_error("assemble: chain length must be >= 1");
        if (c.kind != CondKind::Ordinary && c.curve.empty())
            throw std::domain_error("assemble: curve-borne condition without a carrier");
    }

    Rng base = Rng(seed).fork("prime:" + std::to_string(prime));
    Rng ordinary_rng = base.fork("ordinary");

    Assembled out;
    out.matrix = Matrix(static_cast<std::size_t>(problem.total_rows()),
                        static_cast<std::size_t>(problem.coefficients()));

    // 1. ordinary points, in condition order
    std::vector<std::pair<u64, u64>> ordinary_pts;
    for (const auto& c : problem.conditions) {
        if (c.kind != CondKind::Ordinary) continue;
        for (int tries = 0;; ++tries) {
            if (tries >= 32) throw std::runtime_error("assemble: ordinary point resampling exhausted");
            u64 x = ordinary_rng.below(prime), y = ordinary_rng.below(prime);
            if (std::find(ordinary_pts.begin(), ordinary_pts.end(), std::make_pair(x, y)) !=
                ordinary_pts.end())
                continue;
            ordinary_pts.emplace_back(x, y);
            break;
        }
    }

    // 2. model curves, each from its own stream
    for (const auto& spec : problem.models) {
        if (out.curves.count(spec.name))
            throw std::domain_error("assemble: duplicate model curve \"" + spec.name + "\"");
        if (spec.kind == ModelKind::LineImage) {
            auto built = build_model_curve_T(spec.n, prime, base.fork("model:" + spec.name));
            built.curve.name = spec.name;
            out.curves.emplace(spec.name, std::move(built.curve));
        } else if (spec.kind == ModelKind::ThroughOrdinary) {
            ModelCurve c = implicit_curve_through(spec.name, spec.degree, ordinary_pts, prime);
            out.curves.emplace(spec.name, std::move(c));
        } else {
            // determined curve through its own fresh points
            Rng mrng = base.fork("model:" + spec.name);
            std::vector<std::pair<u64, u64>> pts;
            for (i64 i = 0; i + 1 < monomial_count(spec.degree); ++i)
                pts.emplace_back(mrng.below(prime), mrng.below(prime));
            ModelCurve c = implicit_curve_through(spec.name, spec.degree, pts, prime);
            out.curves.emplace(spec.name, std::move(c));
        }
    }

    // 3. rows, in condition order; curve-borne samples from per-curve streams
    BinomTable binom(static_cast<int>(problem.degree), prime);
    std::map<std::string, Rng> curve_rngs;
    std::map<std::string, std::vector<u64>> curve_used;
    std::size_t next_row = 0;
    std::size_t ord_idx = 0;
    i64 max_chain_trunc = 0;
    for (const auto& c : problem.conditions)
        if (c.kind == CondKind::Chain)
            max_chain_trunc = std::max(max_chain_trunc, c.h * c.m + c.m + 2);
    out.chain_trunc = static_cast<int>(max_chain_trunc) + trunc_extra;

    for (const auto& c : problem.conditions) {
        SampledCondition rec;
        rec.cond = c;
        if (c.kind == CondKind::Ordinary) {
            auto [x, y] = ordinary_pts[ord_idx++];
            rec.x = x;
            rec.y = y;
            emit_ordinary_rows(out.matrix, next_row, problem.degree, x, y, c.h, binom, prime);
        } else {
            auto it = out.curves.find(c.curve);
            if (it == out.curves.end())
                throw std::domain_error("assemble: unknown model curve \"" + c.curve + "\"");
            const ModelCurve& curve = it->second;
            if (!curve_rngs.count(c.curve)) curve_rngs.emplace(c.curve, base.fork("curve:" + c.curve));
            auto pt = curve.sample_smooth(curve_rngs.at(c.curve), curve_used[c.curve]);
            curve_used[c.curve].push_back(pt.param);
            rec.x = pt.x;
            rec.y = pt.y;
            rec.param = pt.param;
            if (c.kind == CondKind::OnCurve) {
                emit_ordinary_rows(out.matrix, next_row, problem.degree, pt.x, pt.y, c.h, binom,
                                   prime);
            } else {
                emit_chain_rows(out.matrix, next_row, problem.degree, curve, pt, c.h, c.m,
                                out.chain_trunc, prime);
            }
        }
        out.samples.push_back(rec);
    }
    if (next_row != out.matrix.rows) throw std::logic_error("assemble: row count mismatch");
    return out;
}

std::optional<std::vector<u64>> build_witness(const InterpolationProblem& problem,
                                              const Assembled& asmb, u64 prime) {
    const WitnessSpec& w = problem.witness;
    if (!w.enabled()) return std::nullopt;
    auto it = asmb.curves.find(w.curve);
    if (it == asmb.curves.end()) return std::nullopt;
    const ModelCurve& curve = it->second;
    if (w.power < 1 || curve.degree * w.power != problem.degree) return std::nullopt;

    // equation of the curve as a bivariate polynomial, raised to the power
    int trunc = static_cast<int>(problem.degree);
    auto cpairs = monomial_pairs(static_cast<int>(curve.degree));
    auto coeffs = curve.affine_coeffs();
    BiSeries eq(trunc);
    for (std::size_t idx = 0; idx < cpairs.size(); ++idx)
        eq.set(cpairs[idx].first, cpairs[idx].second, coeffs[idx]);
    BiSeries member = bi_one(trunc);
    for (i64 e = 0; e < w.power; ++e) member = bi_mul(member, eq, prime);

    auto pairs = monomial_pairs(static_cast<int>(problem.degree));
    std::vector<u64> vec(pairs.size(), 0);
    bool nonzero = false;
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        vec[idx] = member.get(pairs[idx].first, pairs[idx].second);
        nonzero |= vec[idx] != 0;
    }
    if (!nonzero) return std::nullopt;
    return vec;
}

OracleResult dimension(const InterpolationProblem& problem, const OracleOptions& opts) {
    auto t_start = std::chrono::steady_clock::now();
    OracleResult out;
    out.cert.seed = opts.seed;
    out.cert.monomials = problem.degree < 0 ? 0 : problem.coefficients();
    out.cert.condition_rows = problem.degree < 0 ? 0 : problem.total_rows();

    if (problem.degree < 0) {
        // no curves of negative degree: empty by definition
        out.cert.verdict = Verdict::EmptyCertified;
        out.cert.dim_upper = -1;
        out.cert.dim_lower = -1;
        return out;
    }

    i64 vdim = std::max<i64>(-1, problem.virtual_dimension());
    bool has_chain = std::any_of(problem.conditions.begin(), problem.conditions.end(),
                                 [](const PointCondition& c) { return c.kind == CondKind::Chain; });

    i64 best_dim_upper = out.cert.monomials - 1;  // trivial bound, sharpened below
    bool have_primary = false;
    bool witness_ever_ok = false;
    i64 dim_lower = vdim;

    for (int attempt = 0; attempt <= opts.retries; ++attempt) {
        u64 aseed = attempt_seed(opts.seed, attempt);
        Rng prime_rng = Rng(aseed).fork("primes");
        std::vector<u64> primes;
        while (static_cast<int>(primes.size()) < std::max(1, opts.primes)) {
            u64 q = random_prime_62(prime_rng);
            if (std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
        }

        std::vector<PrimeRun> runs;
        bool witness_ok = problem.witness.enabled();
        bool assembly_failed = false;
        for (u64 q : primes) {
            Assembled asmb;
            try {
                asmb = assemble(problem, q, aseed);
            } catch (const std::runtime_error&) {
                assembly_failed = true;  // degenerate samples; try a fresh attempt
                break;
            }
            if (witness_ok) {
                auto wvec = build_witness(problem, asmb, q);
                if (!wvec) {
                    witness_ok = false;
                } else {
                    auto prod = mat_vec(asmb.matrix, *wvec, q);
                    witness_ok = std::all_of(prod.begin(), prod.end(), [](u64 v) { return v == 0; });
                }
            }
            i64 rank = static_cast<i64>(rank_destructive(asmb.matrix, q, opts.pool));
            if (has_chain) {
                Assembled check = assemble(problem, q, aseed, 4);
                i64 rank2 = static_cast<i64>(rank_destructive(check.matrix, q, opts.pool));
                if (rank2 != rank)
                    throw std::logic_error("oracle: chain truncation re-check changed the rank");
            }
            runs.push_back(PrimeRun{q, rank, out.cert.monomials - rank - 1});
        }
        if (assembly_failed) continue;
        witness_ever_ok = witness_ever_ok || witness_ok;

        for (const auto& r : runs) best_dim_upper = std::min(best_dim_upper, r.dim_upper);
        if (!have_primary) {
            out.cert.prime = runs.front().prime;
            out.cert.rank = runs.front().rank;
            out.runs = runs;
            out.witness_accepted = witness_ok;
            have_primary = true;
        }

        bool agree = std::all_of(runs.begin(), runs.end(),
                                 [&](const PrimeRun& r) { return r.dim_upper == runs[0].dim_upper; });
        if (!agree) continue;

        i64 dim_upper = runs[0].dim_upper;
        i64 lower = dim_lower;
        if (witness_ok) lower = std::max<i64>(lower, 0);
        if (dim_upper == -1 || lower == dim_upper) {
            out.cert.prime = runs.front().prime;
            out.cert.rank = runs.front().rank;
            out.runs = runs;
            out.witness_accepted = witness_ok && problem.witness.enabled();
            out.cert.dim_upper = dim_upper;
            out.cert.dim_lower = dim_upper == -1 ? -1 : lower;
            out.cert.verdict = dim_upper == -1 ? Verdict::EmptyCertified : Verdict::DimExact;
            out.cert.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - t_start)
                                      .count();
            if (out.cert.dim_lower > out.cert.dim_upper)
                throw std::logic_error("oracle: dimension sandwich inverted");
            return out;
        }
    }

    // retries exhausted: report the sharpest bounds, no certificate
    if (witness_ever_ok) dim_lower = std::max<i64>(dim_lower, 0);
    out.witness_accepted = witness_ever_ok && problem.witness.enabled();
    out.cert.dim_upper = best_dim_upper;
    out.cert.dim_lower = std::min(dim_lower, best_dim_upper);
    out.cert.verdict = Verdict::Inconclusive;
    out.cert.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t_start)
                              .count();
    return out;
}

bool base_locus_contains(const InterpolationProblem& problem, const std::string& curve,
                         const OracleOptions& opts) {
    OracleResult before = dimension(problem, opts);
    if (before.cert.dim_upper < 0)
        throw std::domain_error("base_locus_contains: system is already empty");
    InterpolationProblem augmented = problem;
    augmented.conditions.push_back(PointCondition{CondKind::OnCurve, 1, 1, curve});
    OracleResult after = dimension(augmented, opts);
    return after.cert.dim_upper == before.cert.dim_upper;
}

InterpolationProblem problem_of_class(const DivisorClass& cls) {
    InterpolationProblem prob;
    prob.degree = cls.degree;
    for (i64 m : cls.mults) {
        if (m < 1) continue;
        prob.conditions.push_back(PointCondition{CondKind::Ordinary, m, 1, ""});
    }
    return prob;
}

}  // namespace nonef
