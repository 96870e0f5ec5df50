#include "pp/protocol.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pp {

Int Config::size() const {
    Int s = 0;
    for (const auto& v : counts) s += v;
    return s;
}

bool Config::nonnegative() const {
    for (const auto& v : counts)
        if (v < 0) return false;
    return true;
}

bool Config::is_zero() const {
    for (const auto& v : counts)
        if (v != 0) return false;
    return true;
}

std::vector<int> Config::support() const {
    std::vector<int> r;
    for (std::size_t q = 0; q < counts.size(); ++q)
        if (counts[q] > 0) r.push_back(static_cast<int>(q));
    return r;
}

Config operator+(const Config& a, const Config& b) {
    Config r = a;
    r += b;
    return r;
}

Config operator-(const Config& a, const Config& b) {
    Config r(std::max(a.dim(), b.dim()));
    for (std::size_t q = 0; q < r.dim(); ++q) {
        if (q < a.dim()) r[q] += a[q];
        if (q < b.dim()) r[q] -= b[q];
    }
    return r;
}

Config operator*(const Int& k, const Config& c) {
    Config r = c;
    for (auto& v : r.counts) v *= k;
    return r;
}

Config& operator+=(Config& a, const Config& b) {
    if (a.dim() < b.dim()) a.counts.resize(b.dim());
    for (std::size_t q = 0; q < b.dim(); ++q) a[q] += b[q];
    return a;
}

bool leq(const Config& a, const Config& b) {
    for (std::size_t q = 0; q < std::max(a.dim(), b.dim()); ++q) {
        Int av = q < a.dim() ? a[q] : Int(0);
        Int bv = q < b.dim() ? b[q] : Int(0);
        if (av > bv) return false;
    }
    return true;
}

Config unit_config(std::size_t n, int state, const Int& count) {
    Config c(n);
    c[static_cast<std::size_t>(state)] = count;
    return c;
}

Transition::Transition(int p_, int q_, int r_, int s_)
    : p(std::min(p_, q_)), q(std::max(p_, q_)), r(std::min(r_, s_)), s(std::max(r_, s_)) {}

void Protocol::sort_transitions() {
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
}

int Protocol::transition_index(const Transition& t) const {
    auto it = std::lower_bound(transitions.begin(), transitions.end(), t);
    if (it != transitions.end() && *it == t)
        return static_cast<int>(it - transitions.begin());
    return -1;
}

bool Protocol::pair_complete() const {
    const int n = static_cast<int>(state_count());
    for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q) {
            bool found = false;
            for (const auto& t : transitions)
                if (t.p == p && t.q == q) { found = true; break; }
            if (!found) return false;
        }
    return true;
}

CoverableStates coverable_states(const Protocol& p) {
    const std::size_t n = p.state_count();
    std::vector<char> cov(n, 0);
    if (p.leaderless()) {
        // Least fixpoint of the support-closure rule. Sound for leaderless
        // protocols because initial configurations scale linearly.
        cov[static_cast<std::size_t>(p.input_state)] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& t : p.transitions) {
                if (cov[static_cast<std::size_t>(t.p)] && cov[static_cast<std::size_t>(t.q)]) {
                    if (!cov[static_cast<std::size_t>(t.r)]) { cov[static_cast<std::size_t>(t.r)] = 1; changed = true; }
                    if (!cov[static_cast<std::size_t>(t.s)]) { cov[static_cast<std::size_t>(t.s)] = 1; changed = true; }
                }
            }
        }
        return {cov, true};
    }
    // With leaders the closure rule is unsound (leaders do not scale); run a
    // bounded forward exploration and report the union of supports seen.
    std::set<std::vector<long long>> seen;
    std::vector<std::vector<long long>> frontier;
    for (long input = 2; input <= 4; ++input) {
        Config c0 = p.leaders + unit_config(n, p.input_state, input);
        std::vector<long long> key(n);
        for (std::size_t q = 0; q < n; ++q) key[q] = c0[q].convert_to<long long>();
        if (seen.insert(key).second) frontier.push_back(key);
    }
    std::size_t processed = 0;
    const std::size_t cap = 20000;
    while (processed < frontier.size() && seen.size() < cap) {
        auto cur = frontier[processed++];
        for (std::size_t q = 0; q < n; ++q)
            if (cur[q] > 0) cov[q] = 1;
        for (const auto& t : p.transitions) {
            auto nxt = cur;
            nxt[static_cast<std::size_t>(t.p)] -= 1;
            nxt[static_cast<std::size_t>(t.q)] -= 1;
            if (nxt[static_cast<std::size_t>(t.p)] < 0 || nxt[static_cast<std::size_t>(t.q)] < 0) continue;
            nxt[static_cast<std::size_t>(t.r)] += 1;
            nxt[static_cast<std::size_t>(t.s)] += 1;
            if (seen.insert(nxt).second) frontier.push_back(nxt);
        }
    }
    return {cov, false};
}

NormalizeResult normalize_protocol(const Protocol& p, bool strip_uncoverable) {
    Protocol out = p;
    const int n = static_cast<int>(p.state_count());
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            bool found = false;
            for (const auto& t : out.transitions)
                if (t.p == a && t.q == b) { found = true; break; }
            if (!found) out.transitions.push_back(Transition(a, b, a, b));
        }
    out.sort_transitions();

    NormalizeResult result;
    if (!strip_uncoverable) {
        result.protocol = std::move(out);
        return result;
    }

    CoverableStates cov = coverable_states(out);
    std::vector<int> remap(p.state_count(), -1);
    Protocol stripped;
    for (std::size_t q = 0; q < out.state_count(); ++q) {
        if (cov.states[q]) {
            remap[q] = static_cast<int>(stripped.states.size());
            stripped.states.push_back(out.states[q]);
        } else {
            result.removed_states.push_back(out.states[q]);
        }
    }
    if (remap[static_cast<std::size_t>(out.input_state)] < 0)
        throw Error(ErrorCode::InputStateRemoved,
                    "input state " + out.states[static_cast<std::size_t>(out.input_state)] + " is not coverable");
    stripped.input_state = remap[static_cast<std::size_t>(out.input_state)];
    stripped.leaders = Config(stripped.state_count());
    for (std::size_t q = 0; q < out.state_count(); ++q) {
        if (q < out.leaders.dim() && out.leaders[q] > 0) {
            if (remap[q] < 0)
                throw Error(ErrorCode::Internal, "leader state classified uncoverable");
            stripped.leaders[static_cast<std::size_t>(remap[q])] = out.leaders[q];
        }
    }
    stripped.output.resize(stripped.state_count());
    for (std::size_t q = 0; q < out.state_count(); ++q)
        if (remap[q] >= 0) stripped.output[static_cast<std::size_t>(remap[q])] = out.output[q];
    for (const auto& t : out.transitions) {
        if (remap[t.p] >= 0 && remap[t.q] >= 0 && remap[t.r] >= 0 && remap[t.s] >= 0)
            stripped.transitions.push_back(Transition(remap[t.p], remap[t.q], remap[t.r], remap[t.s]));
    }
    stripped.sort_transitions();
    // Dropping a transition whose right pair left the state set can break pair
    // completeness; complete again with identities.
    result.protocol = normalize_protocol(stripped, false).protocol;
    return result;
}

Config initial_configuration(const Protocol& p, const Nat& input) {
    Config c = p.leaders;
    if (c.dim() < p.state_count()) c.counts.resize(p.state_count());
    c[static_cast<std::size_t>(p.input_state)] += input;
    if (c.size() < 2)
        throw Error(ErrorCode::TooSmall, "initial configuration has size < 2");
    return c;
}

int output_of(const Protocol& p, const Config& c) {
    bool has0 = false, has1 = false;
    for (std::size_t q = 0; q < c.dim(); ++q) {
        if (c[q] > 0) {
            if (p.output[q] == 1) has1 = true;
            else has0 = true;
        }
    }
    if (has0 && has1) return -1;
    if (has1) return 1;
    if (has0) return 0;
    return -1;  // empty configuration: no consensus
}

}  // namespace pp
