#include "nonef/reportio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace nonef {

const std::string& KvDoc::get(const std::string& key) const {
    for (const auto& [k, v] : fields)
        if (k == key) return v;
    throw std::invalid_argument("document: missing key \"" + key + "\"");
}

std::optional<std::string> KvDoc::get_opt(const std::string& key) const {
    for (const auto& [k, v] : fields)
        if (k == key) return v;
    return std::nullopt;
}

std::vector<std::string> KvDoc::get_all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : fields)
        if (k == key) out.push_back(v);
    return out;
}

std::string KvDoc::to_text() const {
    std::string out = header + "\n";
    for (const auto& [k, v] : fields) out += k + ": " + v + "\n";
    return out;
}

KvDoc KvDoc::from_text(const std::string& text) {
    KvDoc doc;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("document: empty");
    doc.header = line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto pos = line.find(": ");
        if (pos == std::string::npos)
            throw std::invalid_argument("document: bad line \"" + line + "\"");
        doc.fields.emplace_back(line.substr(0, pos), line.substr(pos + 2));
    }
    return doc;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move " + tmp + " to " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------------------
// problems
// ---------------------------------------------------------------------------

namespace {

std::string condition_text(const PointCondition& c) {
    switch (c.kind) {
        case CondKind::Ordinary: return "ordinary h=" + std::to_string(c.h);
        case CondKind::OnCurve: return "oncurve " + c.curve + " h=" + std::to_string(c.h);
        case CondKind::Chain:
            return "chain " + c.curve + " h=" + std::to_string(c.h) + " m=" + std::to_string(c.m);
    }
    throw std::logic_error("condition_text");
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

i64 keyed_int(const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0)
        throw std::invalid_argument("problem: expected " + key + "=..., got \"" + tok + "\"");
    return std::stoll(tok.substr(key.size() + 1));
}

// "<cond text> [xN]" -> condition + count
std::pair<PointCondition, i64> parse_condition(const std::string& text) {
    auto toks = split_ws(text);
    if (toks.empty()) throw std::invalid_argument("problem: empty condition");
    i64 count = 1;
    if (toks.size() >= 2 && toks.back().size() > 1 && toks.back()[0] == 'x' &&
        std::isdigit(static_cast<unsigned char>(toks.back()[1]))) {
        count = std::stoll(toks.back().substr(1));
        toks.pop_back();
    }
    PointCondition c;
    if (toks[0] == "ordinary") {
        if (toks.size() != 2) throw std::invalid_argument("problem: bad ordinary condition");
        c.kind = CondKind::Ordinary;
        c.h = keyed_int(toks[1], "h");
    } else if (toks[0] == "oncurve") {
        if (toks.size() != 3) throw std::invalid_argument("problem: bad oncurve condition");
        c.kind = CondKind::OnCurve;
        c.curve = toks[1];
        c.h = keyed_int(toks[2], "h");
    } else if (toks[0] == "chain") {
        if (toks.size() != 4) throw std::invalid_argument("problem: bad chain condition");
        c.kind = CondKind::Chain;
        c.curve = toks[1];
        c.h = keyed_int(toks[2], "h");
        c.m = keyed_int(toks[3], "m");
    } else {
        throw std::invalid_argument("problem: unknown condition \"" + toks[0] + "\"");
    }
    return {c, count};
}

ModelCurveSpec parse_model(const std::string& text) {
    auto toks = split_ws(text);
    if (toks.size() != 3) throw std::invalid_argument("problem: bad model line \"" + text + "\"");
    ModelCurveSpec spec;
    spec.name = toks[0];
    if (toks[1] == "line-image") {
        spec.kind = ModelKind::LineImage;
        spec.n = keyed_int(toks[2], "n");
    } else if (toks[1] == "through-ordinary") {
        spec.kind = ModelKind::ThroughOrdinary;
        spec.degree = keyed_int(toks[2], "degree");
    } else if (toks[1] == "through-random") {
        spec.kind = ModelKind::ThroughRandom;
        spec.degree = keyed_int(toks[2], "degree");
    } else {
        throw std::invalid_argument("problem: unknown model kind \"" + toks[1] + "\"");
    }
    return spec;
}

std::string model_text(const ModelCurveSpec& spec) {
    if (spec.kind == ModelKind::LineImage)
        return spec.name + " line-image n=" + std::to_string(spec.n);
    if (spec.kind == ModelKind::ThroughOrdinary)
        return spec.name + " through-ordinary degree=" + std::to_string(spec.degree);
    return spec.name + " through-random degree=" + std::to_string(spec.degree);
}

WitnessSpec parse_witness(const std::string& text) {
    auto toks = split_ws(text);
    if (toks.size() == 1 && toks[0] == "none") return WitnessSpec{};
    if (toks.size() == 3 && toks[0] == "model-power")
        return WitnessSpec{toks[1], std::stoll(toks[2])};
    throw std::invalid_argument("problem: bad witness \"" + text + "\"");
}

std::string witness_text(const WitnessSpec& w) {
    if (!w.enabled()) return "none";
    return "model-power " + w.curve + " " + std::to_string(w.power);
}

}  // namespace

std::vector<std::pair<std::string, std::string>> problem_to_fields(
    const InterpolationProblem& problem) {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("problem.degree", std::to_string(problem.degree));
    for (const auto& m : problem.models) out.emplace_back("problem.model", model_text(m));
    for (std::size_t i = 0; i < problem.conditions.size();) {
        std::size_t j = i;
        while (j < problem.conditions.size() && problem.conditions[j] == problem.conditions[i]) ++j;
        std::string text = condition_text(problem.conditions[i]);
        if (j - i > 1) text += " x" + std::to_string(j - i);
        out.emplace_back("problem.cond", text);
        i = j;
    }
    out.emplace_back("problem.witness", witness_text(problem.witness));
    return out;
}

InterpolationProblem problem_from_fields(const KvDoc& doc) {
    InterpolationProblem prob;
    prob.degree = std::stoll(doc.get("problem.degree"));
    for (const auto& m : doc.get_all("problem.model")) prob.models.push_back(parse_model(m));
    for (const auto& ctext : doc.get_all("problem.cond")) {
        auto [c, count] = parse_condition(ctext);
        for (i64 i = 0; i < count; ++i) prob.conditions.push_back(c);
    }
    if (auto w = doc.get_opt("problem.witness")) prob.witness = parse_witness(*w);
    return prob;
}

InterpolationProblem parse_problem_file(const std::string& text) {
    InterpolationProblem prob;
    bool have_degree = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        std::string rest;
        for (std::size_t i = 1; i < toks.size(); ++i) rest += (i > 1 ? " " : "") + toks[i];
        if (toks[0] == "degree") {
            prob.degree = std::stoll(rest);
            have_degree = true;
        } else if (toks[0] == "model") {
            prob.models.push_back(parse_model(rest));
        } else if (toks[0] == "witness") {
            prob.witness = parse_witness(rest);
        } else if (toks[0] == "ordinary" || toks[0] == "oncurve" || toks[0] == "chain") {
            auto [c, count] = parse_condition(line.substr(line.find(toks[0])));
            for (i64 i = 0; i < count; ++i) prob.conditions.push_back(c);
        } else {
            throw std::invalid_argument("problem file: unknown directive \"" + toks[0] + "\"");
        }
    }
    if (!have_degree) throw std::invalid_argument("problem file: missing degree");
    return prob;
}

// ---------------------------------------------------------------------------
// documents
// ---------------------------------------------------------------------------

OracleOptions oracle_options(const RunConfig& cfg) {
    OracleOptions opts;
    opts.seed = cfg.seed;
    opts.primes = cfg.primes;
    opts.retries = cfg.retries;
    return opts;
}

KvDoc certificate_doc(const InterpolationProblem& problem, const RunConfig& cfg,
                      const OracleResult& result, const std::string& class_line) {
    KvDoc doc;
    doc.header = "nonef certificate v1";
    if (!class_line.empty()) doc.add("class", class_line);
    for (auto& [k, v] : problem_to_fields(problem)) doc.add(k, v);
    doc.add("seed", std::to_string(result.cert.seed));
    doc.add("config.primes", std::to_string(cfg.primes));
    doc.add("config.retries", std::to_string(cfg.retries));
    doc.add("prime", std::to_string(result.cert.prime));
    doc.add("monomials", std::to_string(result.cert.monomials));
    doc.add("condition_rows", std::to_string(result.cert.condition_rows));
    doc.add("rank", std::to_string(result.cert.rank));
    doc.add("dim_upper", std::to_string(result.cert.dim_upper));
    doc.add("dim_lower", std::to_string(result.cert.dim_lower));
    doc.add("verdict", to_string(result.cert.verdict));
    doc.add("witness_accepted", result.witness_accepted ? "1" : "0");
    for (std::size_t i = 1; i < result.runs.size(); ++i)
        doc.add("agreement", "prime=" + std::to_string(result.runs[i].prime) +
                                 " rank=" + std::to_string(result.runs[i].rank) + " dim_upper=" +
                                 std::to_string(result.runs[i].dim_upper));
    doc.add("elapsed_ms", std::to_string(result.cert.elapsed_ms));
    return doc;
}

namespace {

std::string step_text(const ReplayStep& s) {
    std::string st = s.status == StepStatus::Ok         ? "ok"
                     : s.status == StepStatus::Failed   ? "failed"
                                                        : "unverified";
    std::string out = "t=" + std::to_string(s.twist);
    out += " kind=" + std::string(s.kind == StepKind::Computed ? "Computed" : "Cited");
    out += " status=" + st;
    out += " name=" + s.name;
    out += " detail=\"" + s.detail + "\"";
    return out;
}

}  // namespace

KvDoc replay_doc(const ReplayReport& report, bool lemma_inline) {
    KvDoc doc;
    doc.header = "nonef replay v1";
    doc.add("mode", report.mode);
    doc.add("d", std::to_string(report.d));
    doc.add("m", std::to_string(report.m));
    doc.add("k", std::to_string(report.k));
    doc.add("lemma_inline", lemma_inline ? "1" : "0");
    doc.add("used_oracle", report.used_oracle ? "1" : "0");
    doc.add("seed", std::to_string(report.seed));
    doc.add("primes", std::to_string(report.primes));
    for (const auto& s : report.steps) doc.add("step", step_text(s));
    doc.add("conclusion", report.conclusion());
    return doc;
}

KvDoc lemma_doc(const LemmaReport& report) {
    KvDoc doc;
    doc.header = "nonef lemma v1";
    doc.add("n", std::to_string(report.n));
    doc.add("t", std::to_string(report.t));
    doc.add("seed", std::to_string(report.seed));
    doc.add("primes", std::to_string(report.primes));
    doc.add("prime", std::to_string(report.prime));
    doc.add("dim_upper", std::to_string(report.dim_upper));
    doc.add("dim_lower", std::to_string(report.dim_lower));
    doc.add("dim_verdict", to_string(report.dim_verdict));
    for (const auto& s : report.splits)
        doc.add("split", std::string("base_locus=") + (s.base_locus ? "yes" : "no") +
                             " residual_degree=" + std::to_string(s.residual_degree));
    doc.add("member", report.member());
    doc.add("outcome", report.outcome == LemmaOutcome::Verified     ? "Verified"
                       : report.outcome == LemmaOutcome::Unverified ? "Unverified"
                                                                    : "Failed");
    return doc;
}

namespace {

std::optional<std::string> compare_docs(const KvDoc& got, const KvDoc& want) {
    if (got.header != want.header)
        return "header: got \"" + got.header + "\", expected \"" + want.header + "\"";
    std::size_t gi = 0, wi = 0;
    auto skip = [](const KvDoc& d, std::size_t& i) {
        while (i < d.fields.size() && d.fields[i].first == "elapsed_ms") ++i;
    };
    for (;;) {
        skip(got, gi);
        skip(want, wi);
        if (gi == got.fields.size() && wi == want.fields.size()) return std::nullopt;
        if (gi == got.fields.size())
            return "missing line \"" + want.fields[wi].first + ": " + want.fields[wi].second + "\"";
        if (wi == want.fields.size())
            return "extra line \"" + got.fields[gi].first + ": " + got.fields[gi].second + "\"";
        if (got.fields[gi] != want.fields[wi])
            return got.fields[gi].first + ": got \"" + got.fields[gi].second + "\", expected \"" +
                   want.fields[wi].second + "\"";
        ++gi;
        ++wi;
    }
}

}  // namespace

std::optional<std::string> verify_document(const std::string& text) {
    KvDoc doc = KvDoc::from_text(text);
    if (doc.header == "nonef certificate v1") {
        InterpolationProblem prob = problem_from_fields(doc);
        RunConfig cfg;
        cfg.seed = std::stoull(doc.get("seed"));
        cfg.primes = static_cast<int>(std::stol(doc.get("config.primes")));
        cfg.retries = static_cast<int>(std::stol(doc.get("config.retries")));
        OracleResult result = dimension(prob, oracle_options(cfg));
        std::string class_line = doc.get_opt("class").value_or("");
        KvDoc fresh = certificate_doc(prob, cfg, result, class_line);
        return compare_docs(fresh, doc);
    }
    if (doc.header == "nonef replay v1") {
        std::string mode = doc.get("mode");
        i64 d = std::stoll(doc.get("d"));
        i64 m = std::stoll(doc.get("m"));
        i64 k = std::stoll(doc.get("k"));
        bool lemma_inline = doc.get("lemma_inline") == "1";
        ReplayOptions opt;
        opt.lemma_inline = lemma_inline;
        opt.oracle.seed = std::stoull(doc.get("seed"));
        opt.oracle.primes = static_cast<int>(std::stol(doc.get("primes")));
        ReplayReport rep;
        if (mode == "m2")
            rep = replay_m2(d, k, opt);
        else if (mode == "induction")
            rep = replay_induction(d, m, k, opt);
        else if (mode == "bc")
            rep = check_theorem_bc(d, k, opt.oracle);
        else
            throw std::invalid_argument("verify: unknown replay mode \"" + mode + "\"");
        return compare_docs(replay_doc(rep, lemma_inline), doc);
    }
    if (doc.header == "nonef lemma v1") {
        OracleOptions opts;
        opts.seed = std::stoull(doc.get("seed"));
        opts.primes = static_cast<int>(std::stol(doc.get("primes")));
        LemmaReport rep = verify_lemma(std::stoll(doc.get("n")), std::stoll(doc.get("t")), opts);
        return compare_docs(lemma_doc(rep), doc);
    }
    throw std::invalid_argument("verify: unrecognized document header \"" + doc.header + "\"");
}

}  // namespace nonef
