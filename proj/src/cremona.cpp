#include "nonef/cremona.hpp"

#include <array>
#include <sstream>

namespace nonef {

std::string TransformLog::to_text() const {
    std::string out;
    for (const auto& s : steps) {
        out += "q " + std::to_string(s.i) + " " + std::to_string(s.j) + " " + std::to_string(s.k);
        out += '\n';
    }
    return out;
}

TransformLog TransformLog::from_text(const std::string& text) {
    TransformLog log;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        QuadTransform t;
        if (!(ls >> tag >> t.i >> t.j >> t.k) || tag != "q")
            throw std::invalid_argument("transform log: bad line \"" + line + "\"");
        log.steps.push_back(t);
    }
    return log;
}

DivisorClass quadratic_transform(const DivisorClass& a, const QuadTransform& t) {
    std::size_t n = a.points();
    if (t.i >= n || t.j >= n || t.k >= n)
        throw std::domain_error("quadratic_transform: index out of range");
    if (t.i == t.j || t.j == t.k || t.i == t.k)
        throw std::domain_error("quadratic_transform: base indices must be distinct");
    i64 mi = a.mults[t.i], mj = a.mults[t.j], mk = a.mults[t.k];
    DivisorClass r = a;
    r.degree = checked_sub(checked_mul(2, a.degree), checked_add(mi, checked_add(mj, mk)));
    r.mults[t.i] = checked_sub(a.degree, checked_add(mj, mk));
    r.mults[t.j] = checked_sub(a.degree, checked_add(mi, mk));
    r.mults[t.k] = checked_sub(a.degree, checked_add(mi, mj));
    return r;
}

TransformLog reversed(const TransformLog& log) {
    TransformLog r;
    r.steps.assign(log.steps.rbegin(), log.steps.rend());
    return r;
}

DivisorClass image_under_log(const DivisorClass& a, const TransformLog& log) {
    DivisorClass cur = a;
    for (const auto& s : log.steps) cur = quadratic_transform(cur, s);
    return cur;
}

namespace {

ChainResult reduce_first_point_pairs(const DivisorClass& a) {
    if (a.points() % 2 == 0 || a.points() < 3)
        throw std::domain_error("reduce_chain: first-point-pairs strategy needs 2n+1 points, n >= 1");
    std::size_t n = (a.points() - 1) / 2;
    ChainResult r{a, {}};
    for (std::size_t s = 1; s <= n; ++s) {
        QuadTransform t{0, 2 * s - 1, 2 * s};
        r.terminal = quadratic_transform(r.terminal, t);
        r.log.steps.push_back(t);
    }
    return r;
}

// The three largest multiplicities, ties broken by lower index.
std::array<std::size_t, 3> top_three(const std::vector<i64>& m) {
    std::array<std::size_t, 3> idx{0, 0, 0};
    std::array<bool, 3> set{false, false, false};
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::size_t pos = 3;
        for (std::size_t s = 0; s < 3; ++s) {
            if (!set[s] || m[i] > m[idx[s]]) {
                pos = s;
                break;
            }
        }
        if (pos == 3) continue;
        for (std::size_t s = 2; s > pos; --s) {
            idx[s] = idx[s - 1];
            set[s] = set[s - 1];
        }
        idx[pos] = i;
        set[pos] = true;
    }
    return idx;
}

ChainResult reduce_greedy(const DivisorClass& a) {
    ChainResult r{a, {}};
    if (a.points() < 3) return r;
    std::size_t bound = 10 * a.points() + 100;
    for (;;) {
        auto idx = top_three(r.terminal.mults);
        i64 sum = checked_add(r.terminal.mults[idx[0]],
                              checked_add(r.terminal.mults[idx[1]], r.terminal.mults[idx[2]]));
        if (r.terminal.degree >= sum) return r;
        if (r.log.size() >= bound)
            throw std::runtime_error("reduce_chain: greedy reduction exceeded step bound " +
                                     std::to_string(bound));
        QuadTransform t{idx[0], idx[1], idx[2]};
        r.terminal = quadratic_transform(r.terminal, t);
        r.log.steps.push_back(t);
    }
}

}  // namespace

ChainResult reduce_chain(const DivisorClass& a, ChainStrategy strategy) {
    switch (strategy) {
        case ChainStrategy::FirstPointPairs: return reduce_first_point_pairs(a);
        case ChainStrategy::Greedy: return reduce_greedy(a);
    }
    throw std::logic_error("reduce_chain: unknown strategy");
}

SplitResult split_curve(const DivisorClass& a, const DivisorClass& c) {
    if (!is_minus_one_class(c))
        throw std::domain_error("split_curve: curve is not a (-1)-class; splitting count undefined");
    i64 pairing = intersect(a, c);
    i64 mult = pairing < 0 ? -pairing : 0;
    return SplitResult{mult, a - mult * c};
}

}  // namespace nonef
