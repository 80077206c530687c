// nonef: emptiness/dimension certificates for linear systems of plane
// curves, Cremona reduction, and machine-checked degeneration replays.
//
// Exit codes: 0 verified / certified as expected, 1 inconclusive or
// mismatch, 2 invalid input.

#include <cstdlib>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "nonef/cremona.hpp"
#include "nonef/notation.hpp"
#include "nonef/oracle.hpp"
#include "nonef/replay.hpp"
#include "nonef/reportio.hpp"

namespace {

using namespace nonef;

u64 default_seed() {
    if (const char* env = std::getenv("NONEF_SEED")) {
        char* end = nullptr;
        u64 v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw std::invalid_argument("NONEF_SEED is not an integer");
    }
    std::random_device rd;
    return (u64(rd()) << 32) ^ rd();
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool& seed_given) {
    cmd->add_flag("--quiet", cfg.quiet, "suppress stdout echo of the document");
    cmd->add_option("--out", cfg.out, "output path (default: derived name in the working directory)");
    cmd->add_option("--primes", cfg.primes, "independent primes per verdict")->check(CLI::Range(1, 16));
    cmd->add_option("--retries", cfg.retries, "fresh-seed retries on inconclusive runs")
        ->check(CLI::Range(0, 16));
    auto* s = cmd->add_option("--seed", cfg.seed, "RNG seed (default: NONEF_SEED or OS entropy)");
    s->each([&seed_given](const std::string&) { seed_given = true; });
}

int emit(const KvDoc& doc, const RunConfig& cfg, const std::string& default_name) {
    std::string path = cfg.out.empty() ? default_name : cfg.out;
    if (path != "-") write_file_atomic(path, doc.to_text());
    if (!cfg.quiet) {
        std::cout << doc.to_text();
        if (path != "-") std::cout << "written: " << path << "\n";
    }
    return 0;
}

// Dimensions stated by the classification for the degenerate ranges; the
// emptiness range is d >= 4, 2 <= m <= d-2.
std::optional<i64> expected_dim(i64 d, i64 m, i64 k) {
    if (m == 1) return k;
    if (m == 0) return k * d;
    if (d == 3 && (m == 2 || m == 3)) return 0;
    if (d == 2 && m == 2) return k;
    return std::nullopt;
}

int run_xi(i64 d, i64 m, i64 k, RunConfig& cfg) {
    DivisorClass cls = xi_class({d, m, k});  // domain errors -> exit 2
    InterpolationProblem prob = problem_of_class(cls);
    OracleResult result = dimension(prob, oracle_options(cfg));
    KvDoc doc = certificate_doc(prob, cfg, result, format_class(cls));
    emit(doc, cfg,
         "xi_d" + std::to_string(d) + "_m" + std::to_string(m) + "_k" + std::to_string(k) +
             ".cert");
    if (result.cert.verdict == Verdict::Inconclusive) return 1;
    bool empty_range = d >= 4 && m >= 2 && m <= d - 2;
    if (empty_range) return result.cert.verdict == Verdict::EmptyCertified ? 0 : 1;
    if (auto want = expected_dim(d, m, k))
        return result.cert.verdict == Verdict::DimExact && result.cert.dim_upper == *want ? 0 : 1;
    return 0;  // outside the stated table: any certified verdict counts
}

int run_dim(const std::string& problem_path, RunConfig& cfg) {
    InterpolationProblem prob = parse_problem_file(read_file(problem_path));
    OracleResult result = dimension(prob, oracle_options(cfg));
    KvDoc doc = certificate_doc(prob, cfg, result);
    emit(doc, cfg, problem_path + ".cert");
    return result.cert.verdict == Verdict::Inconclusive ? 1 : 0;
}

int run_replay_report(const ReplayReport& rep, bool lemma_inline, RunConfig& cfg,
                      const std::string& name) {
    KvDoc doc = replay_doc(rep, lemma_inline);
    emit(doc, cfg, name);
    return rep.all_verified() ? 0 : 1;
}

int run_lemma(i64 n, i64 t, RunConfig& cfg) {
    LemmaReport rep = verify_lemma(n, t, oracle_options(cfg));
    KvDoc doc = lemma_doc(rep);
    emit(doc, cfg, "lemma_n" + std::to_string(n) + "_t" + std::to_string(t) + ".report");
    return rep.verified() ? 0 : 1;
}

int run_cremona(const std::string& text, const std::string& strategy) {
    DivisorClass cls = parse_class(text);
    ChainStrategy strat;
    if (strategy == "greedy")
        strat = ChainStrategy::Greedy;
    else if (strategy == "pairs")
        strat = ChainStrategy::FirstPointPairs;
    else
        throw std::invalid_argument("cremona: unknown strategy \"" + strategy + "\"");
    ChainResult r = reduce_chain(cls, strat);
    std::cout << format_class_normalized(r.terminal) << "\n" << r.log.to_text();
    return 0;
}

int run_verify(const std::string& path) {
    auto divergence = verify_document(read_file(path));
    if (!divergence) {
        std::cout << "verified: " << path << "\n";
        return 0;
    }
    std::cout << "mismatch: " << *divergence << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certificates and proof replays for plane linear systems"};
    app.require_subcommand(1);

    RunConfig cfg;
    bool seed_given = false;

    i64 d = 4, m = 2, k = 1, n = 3, t = 1;
    std::string problem_path, verify_path, class_text, strategy = "greedy";
    bool lemma_inline = false;

    auto* xi = app.add_subcommand("xi", "certify k*xi_{d,m}");
    xi->add_option("--d", d)->required();
    xi->add_option("--m", m)->required();
    xi->add_option("--k", k)->required();
    add_common(xi, cfg, seed_given);

    auto* dim = app.add_subcommand("dim", "certify a raw interpolation problem");
    dim->add_option("--problem", problem_path, "problem file")->required();
    add_common(dim, cfg, seed_given);

    auto* replay = app.add_subcommand("replay", "machine-checked proof replays");
    replay->require_subcommand(1);
    auto* m2 = replay->add_subcommand("m2", "the m = 2 degeneration over all twists");
    m2->add_option("--d", d)->required();
    m2->add_option("--k", k)->required();
    m2->add_flag("--lemma-inline", lemma_inline, "run the uniqueness check in the oracle");
    add_common(m2, cfg, seed_given);
    auto* ind = replay->add_subcommand("induction", "the induction for m >= 3");
    ind->add_option("--d", d)->required();
    ind->add_option("--m", m)->required();
    ind->add_option("--k", k)->required();
    add_common(ind, cfg, seed_given);
    auto* lem = replay->add_subcommand("lemma", "specialized uniqueness check");
    lem->add_option("--n", n)->required();
    lem->add_option("--t", t)->required();
    add_common(lem, cfg, seed_given);
    auto* bc = replay->add_subcommand("bc", "pencil and unique-cubic dimensions");
    bc->add_option("--d", d)->required();
    bc->add_option("--k", k)->required();
    add_common(bc, cfg, seed_given);

    auto* crem = app.add_subcommand("cremona", "reduce a class, print terminal class and log");
    crem->add_option("class", class_text, "class notation, e.g. \"10;6,3^6\"")->required();
    crem->add_option("--strategy", strategy, "greedy (default) or pairs");

    auto* ver = app.add_subcommand("verify", "re-run a certificate or report from its seed");
    ver->add_option("path", verify_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!seed_given) cfg.seed = default_seed();
        if (*xi) return run_xi(d, m, k, cfg);
        if (*dim) return run_dim(problem_path, cfg);
        if (*m2) {
            ReplayOptions opt{lemma_inline, oracle_options(cfg)};
            return run_replay_report(replay_m2(d, k, opt), lemma_inline, cfg,
                                     "replay_m2_d" + std::to_string(d) + "_k" + std::to_string(k) +
                                         ".report");
        }
        if (*ind) {
            ReplayOptions opt{false, oracle_options(cfg)};
            return run_replay_report(replay_induction(d, m, k, opt), false, cfg,
                                     "replay_induction_d" + std::to_string(d) + "_m" +
                                         std::to_string(m) + "_k" + std::to_string(k) + ".report");
        }
        if (*lem) return run_lemma(n, t, cfg);
        if (*bc)
            return run_replay_report(check_theorem_bc(d, k, oracle_options(cfg)), false, cfg,
                                     "replay_bc_d" + std::to_string(d) + "_k" + std::to_string(k) +
                                         ".report");
        if (*crem) return run_cremona(class_text, strategy);
        if (*ver) return run_verify(verify_path);
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
