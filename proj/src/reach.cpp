#include "pp/reach.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace pp {

std::vector<long long> to_key(const Config& c) {
    std::vector<long long> key(c.dim());
    for (std::size_t q = 0; q < c.dim(); ++q) {
        if (c[q] < 0 || c[q] > std::numeric_limits<long long>::max())
            throw Error(ErrorCode::LimitExceeded, "configuration count outside fixed-size search range");
        key[q] = c[q].convert_to<long long>();
    }
    return key;
}

Config from_key(const std::vector<long long>& key) {
    Config c(key.size());
    for (std::size_t q = 0; q < key.size(); ++q) c[q] = key[q];
    return c;
}

ReachGraph reachable_configs(const Protocol& p, const Config& c, const Limits& limits) {
    if (c.size() < 2)
        throw Error(ErrorCode::TooSmall, "reachability requires a configuration of size >= 2");
    ReachGraph g;
    std::vector<long long> root = to_key(c);
    g.index[root] = 0;
    g.nodes.push_back(root);
    g.edges.emplace_back();
    for (std::size_t at = 0; at < g.nodes.size(); ++at) {
        const std::vector<long long> cur = g.nodes[at];
        for (std::size_t ti = 0; ti < p.transitions.size(); ++ti) {
            const Transition& t = p.transitions[ti];
            const bool en = (t.p == t.q) ? cur[static_cast<std::size_t>(t.p)] >= 2
                                         : cur[static_cast<std::size_t>(t.p)] >= 1 &&
                                               cur[static_cast<std::size_t>(t.q)] >= 1;
            if (!en) continue;
            std::vector<long long> nxt = cur;
            nxt[static_cast<std::size_t>(t.p)] -= 1;
            nxt[static_cast<std::size_t>(t.q)] -= 1;
            nxt[static_cast<std::size_t>(t.r)] += 1;
            nxt[static_cast<std::size_t>(t.s)] += 1;
            auto [it, inserted] = g.index.try_emplace(nxt, static_cast<int>(g.nodes.size()));
            if (inserted) {
                if (g.nodes.size() >= limits.max_nodes) {
                    g.complete = false;
                    throw Error(ErrorCode::LimitExceeded, "reachability node limit exceeded");
                }
                g.nodes.push_back(nxt);
                g.edges.emplace_back();
            }
            g.edges[at].emplace_back(static_cast<int>(ti), it->second);
        }
    }
    return g;
}

namespace {

int node_output(const Protocol& p, const std::vector<long long>& key) {
    bool has0 = false, has1 = false;
    for (std::size_t q = 0; q < key.size(); ++q) {
        if (key[q] > 0) {
            if (p.output[q] == 1) has1 = true;
            else has0 = true;
        }
    }
    if (has0 && has1) return -1;
    if (has1) return 1;
    if (has0) return 0;
    return -1;
}

std::vector<std::vector<int>> reverse_edges(const ReachGraph& g) {
    std::vector<std::vector<int>> rev(g.nodes.size());
    for (std::size_t u = 0; u < g.edges.size(); ++u)
        for (const auto& [ti, v] : g.edges[u]) rev[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));
    return rev;
}

std::vector<char> backward_mark(const ReachGraph& g, const std::vector<char>& seeds) {
    std::vector<char> mark = seeds;
    auto rev = reverse_edges(g);
    std::deque<int> todo;
    for (std::size_t v = 0; v < mark.size(); ++v)
        if (mark[v]) todo.push_back(static_cast<int>(v));
    while (!todo.empty()) {
        int v = todo.front();
        todo.pop_front();
        for (int u : rev[static_cast<std::size_t>(v)])
            if (!mark[static_cast<std::size_t>(u)]) {
                mark[static_cast<std::size_t>(u)] = 1;
                todo.push_back(u);
            }
    }
    return mark;
}

}  // namespace

GraphAnalysis analyze_stability(const Protocol& p, const ReachGraph& g, int b) {
    std::vector<char> bad(g.nodes.size(), 0);
    for (std::size_t v = 0; v < g.nodes.size(); ++v)
        if (node_output(p, g.nodes[v]) != b) bad[v] = 1;
    std::vector<char> can_reach_bad = backward_mark(g, bad);
    GraphAnalysis a;
    a.stable.resize(g.nodes.size());
    for (std::size_t v = 0; v < g.nodes.size(); ++v) a.stable[v] = !can_reach_bad[v];
    a.can_reach_stable = backward_mark(g, a.stable);
    return a;
}

bool is_stable(const Protocol& p, const Config& c, int b, const Limits& limits) {
    ReachGraph g = reachable_configs(p, c, limits);
    for (const auto& node : g.nodes)
        if (node_output(p, node) != b) return false;
    return true;
}

namespace {

bool dominated(const Config& c, const Antichain& chain) {
    for (const auto& m : chain)
        if (leq(m, c)) return true;
    return false;
}

void insert_minimal(Antichain& chain, const Config& c) {
    if (dominated(c, chain)) return;
    chain.erase(std::remove_if(chain.begin(), chain.end(),
                               [&](const Config& m) { return leq(c, m); }),
                chain.end());
    chain.push_back(c);
}

}  // namespace

bool in_upward_closure(const Config& c, const Antichain& basis) {
    return dominated(c, basis);
}

Antichain backward_coverability(const Protocol& p, const Antichain& targets, const Limits& limits) {
    Antichain basis;
    for (const auto& m : targets) insert_minimal(basis, m);
    const std::size_t n = p.state_count();
    std::deque<Config> todo(basis.begin(), basis.end());
    while (!todo.empty()) {
        Config m = todo.front();
        todo.pop_front();
        for (const auto& t : p.transitions) {
            // minimal C enabled for t with C + delta(t) >= m
            Config cand(n);
            Displacement d = displacement(p, t);
            for (std::size_t q = 0; q < n; ++q) {
                Int need = m[q] - d[q];
                if (need < 0) need = 0;
                cand[q] = need;
            }
            cand[static_cast<std::size_t>(t.p)] = std::max(cand[static_cast<std::size_t>(t.p)],
                                                           Int(t.p == t.q ? 2 : 1));
            if (t.p != t.q)
                cand[static_cast<std::size_t>(t.q)] = std::max(cand[static_cast<std::size_t>(t.q)], Int(1));
            if (!dominated(cand, basis)) {
                insert_minimal(basis, cand);
                todo.push_back(cand);
                if (basis.size() > limits.max_antichain)
                    throw Error(ErrorCode::LimitExceeded, "backward coverability antichain limit exceeded");
            }
        }
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

bool ideal_member(const Config& c, const Ideal& i) {
    if (i.form == IdealForm::downCylinder) {
        for (std::size_t q = 0; q < c.dim(); ++q) {
            if (q < i.free.size() && i.free[q]) continue;
            Int b = q < i.bound.dim() ? i.bound[q] : Int(0);
            if (c[q] > b) return false;
        }
        return true;
    }
    // paperCylinder: c - B must be a multiset supported on S
    for (std::size_t q = 0; q < c.dim(); ++q) {
        Int b = q < i.bound.dim() ? i.bound[q] : Int(0);
        Int diff = c[q] - b;
        bool free_q = q < i.free.size() && i.free[q];
        if (diff < 0) return false;
        if (!free_q && diff != 0) return false;
    }
    return true;
}

bool IdealDecomposition::member(const Config& c) const {
    for (const auto& i : ideals)
        if (ideal_member(c, i)) return true;
    return false;
}

Nat IdealDecomposition::norm() const {
    Nat m = 0;
    for (const auto& i : ideals)
        for (const auto& v : i.bound.counts)
            if (v > m) m = v;
    return m;
}

namespace {

// i contained in j, both downCylinders in canonical form
bool ideal_contained(const Ideal& i, const Ideal& j) {
    for (std::size_t q = 0; q < j.free.size(); ++q) {
        if (j.free[q]) continue;
        if (q < i.free.size() && i.free[q]) return false;
        Int bi = q < i.bound.dim() ? i.bound[q] : Int(0);
        Int bj = q < j.bound.dim() ? j.bound[q] : Int(0);
        if (bi > bj) return false;
    }
    return true;
}

void minimize_ideals(std::vector<Ideal>& ideals) {
    std::sort(ideals.begin(), ideals.end(), [](const Ideal& a, const Ideal& b) {
        return std::tie(a.free, a.bound.counts) < std::tie(b.free, b.bound.counts);
    });
    ideals.erase(std::unique(ideals.begin(), ideals.end()), ideals.end());
    std::vector<Ideal> kept;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < ideals.size() && !redundant; ++j)
            if (i != j && ideal_contained(ideals[i], ideals[j]))
                redundant = true;
        if (!redundant) kept.push_back(ideals[i]);
    }
    ideals.swap(kept);
}

// Complement of the upward closure of an antichain, as downCylinder ideals:
// distribute the per-element constraints C(q) <= m(q)-1 and intersect.
std::vector<Ideal> upward_complement(std::size_t n, const Antichain& basis, const Limits& limits) {
    std::vector<Ideal> result;
    for (const auto& m : basis)
        if (m.is_zero()) return result;  // upward closure is everything
    std::vector<std::vector<int>> supports;
    std::size_t combos = 1;
    for (const auto& m : basis) {
        supports.push_back(m.support());
        combos *= supports.back().size();
        if (combos > 4'000'000)
            throw Error(ErrorCode::LimitExceeded, "ideal complement blow-up");
    }
    std::vector<std::size_t> choice(basis.size(), 0);
    while (true) {
        std::vector<Int> bound(n, -1);  // -1 = unconstrained
        for (std::size_t i = 0; i < basis.size(); ++i) {
            int q = supports[i][choice[i]];
            Int b = basis[i][static_cast<std::size_t>(q)] - 1;
            if (bound[static_cast<std::size_t>(q)] < 0 || b < bound[static_cast<std::size_t>(q)])
                bound[static_cast<std::size_t>(q)] = b;
        }
        Ideal ideal;
        ideal.form = IdealForm::downCylinder;
        ideal.bound = Config(n);
        ideal.free.assign(n, 0);
        for (std::size_t q = 0; q < n; ++q) {
            if (bound[q] < 0) ideal.free[q] = 1;
            else ideal.bound[q] = bound[q];
        }
        result.push_back(std::move(ideal));
        std::size_t i = 0;
        while (i < basis.size()) {
            if (++choice[i] < supports[i].size()) break;
            choice[i] = 0;
            ++i;
        }
        if (i == basis.size()) break;
        (void)limits;
    }
    minimize_ideals(result);
    return result;
}

std::vector<Ideal> stable_ideals_for(const Protocol& p, int b, const Limits& limits) {
    Antichain bad;
    for (std::size_t q = 0; q < p.state_count(); ++q)
        if (p.output[q] != b) bad.push_back(unit_config(p.state_count(), static_cast<int>(q)));
    Antichain basis = backward_coverability(p, bad, limits);
    return upward_complement(p.state_count(), basis, limits);
}

}  // namespace

IdealDecomposition stable_set_ideals(const Protocol& p, char which, const Limits& limits) {
    IdealDecomposition dec;
    dec.polarity = which;
    if (which == '0' || which == 'S')
        for (auto& i : stable_ideals_for(p, 0, limits)) dec.ideals.push_back(std::move(i));
    if (which == '1' || which == 'S')
        for (auto& i : stable_ideals_for(p, 1, limits)) dec.ideals.push_back(std::move(i));
    minimize_ideals(dec.ideals);
    // sanity against the theoretical basis bounds
    const unsigned n = static_cast<unsigned>(p.state_count());
    const Nat beta_log2 = 2 * factorial(2 * n + 1) + 1;
    const Nat theta_log2 = factorial(2 * n + 2);
    if (!le_pow2(dec.norm(), beta_log2) || !le_pow2(Nat(dec.ideals.size()), theta_log2))
        throw Error(ErrorCode::Internal, "computed decomposition exceeds the theoretical basis bounds");
    return dec;
}

Verdict verify_threshold(const Protocol& p, const Nat& eta, long max_input, const Limits& limits) {
    if (eta < 2 || max_input < 2)
        throw Error(ErrorCode::PreconditionFailed, "verify_threshold requires eta >= 2 and max_input >= 2");
    for (long i = 2; i <= max_input; ++i) {
        const int b = Nat(i) >= eta ? 1 : 0;
        ReachGraph g = reachable_configs(p, initial_configuration(p, i), limits);
        GraphAnalysis a = analyze_stability(p, g, b);
        for (std::size_t v = 0; v < g.nodes.size(); ++v) {
            if (!a.can_reach_stable[v]) {
                Verdict verdict;
                verdict.accept = false;
                verdict.input = i;
                verdict.config = from_key(g.nodes[v]);
                verdict.wanted_output = b;
                return verdict;
            }
        }
    }
    Verdict verdict;
    verdict.accept = true;
    return verdict;
}

}  // namespace pp
