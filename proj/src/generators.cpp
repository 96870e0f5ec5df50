#include "pp/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pp {

Protocol flock_unary(unsigned k) {
    if (k < 1) throw Error(ErrorCode::PreconditionFailed, "flock_unary requires k >= 1");
    const long N = 1L << k;
    Protocol p;
    for (long i = 0; i <= N; ++i) p.states.push_back(std::to_string(i));
    p.input_state = 1;
    p.leaders = Config(p.state_count());
    p.output.assign(p.state_count(), 0);
    p.output[static_cast<std::size_t>(N)] = 1;
    for (long a = 0; a <= N; ++a)
        for (long b = a; b <= N; ++b) {
            if (a + b < N)
                p.transitions.push_back(Transition(static_cast<int>(a), static_cast<int>(b),
                                                   0, static_cast<int>(a + b)));
            else
                p.transitions.push_back(Transition(static_cast<int>(a), static_cast<int>(b),
                                                   static_cast<int>(N), static_cast<int>(N)));
        }
    p.sort_transitions();
    return p;
}

Protocol flock_binary(unsigned k) {
    if (k < 1) throw Error(ErrorCode::PreconditionFailed, "flock_binary requires k >= 1");
    // state index 0 holds value 0; index i in [1, k+1] holds value 2^(i-1)
    Protocol p;
    p.states.push_back("0");
    for (unsigned i = 0; i <= k; ++i) p.states.push_back(std::to_string(1L << i));
    p.input_state = 1;  // value 2^0
    p.leaders = Config(p.state_count());
    p.output.assign(p.state_count(), 0);
    const int top = static_cast<int>(k) + 1;  // value 2^k
    p.output[static_cast<std::size_t>(top)] = 1;
    for (unsigned i = 0; i < k; ++i)
        p.transitions.push_back(Transition(static_cast<int>(i) + 1, static_cast<int>(i) + 1,
                                           0, static_cast<int>(i) + 2));
    for (int a = 0; a <= top; ++a)
        p.transitions.push_back(Transition(a, top, top, top));
    p.sort_transitions();
    return p;
}

namespace {

std::vector<int> encode(const Protocol& p) {
    std::vector<int> code;
    for (const auto& t : p.transitions) {
        code.push_back(t.p);
        code.push_back(t.q);
        code.push_back(t.r);
        code.push_back(t.s);
    }
    for (int o : p.output) code.push_back(o);
    return code;
}

Protocol permuted(const Protocol& p, const std::vector<int>& perm) {
    Protocol r = p;
    for (std::size_t i = 0; i < p.transitions.size(); ++i) {
        const Transition& t = p.transitions[i];
        r.transitions[i] = Transition(perm[static_cast<std::size_t>(t.p)], perm[static_cast<std::size_t>(t.q)],
                                      perm[static_cast<std::size_t>(t.r)], perm[static_cast<std::size_t>(t.s)]);
    }
    r.sort_transitions();
    for (std::size_t q = 0; q < p.state_count(); ++q)
        r.output[static_cast<std::size_t>(perm[q])] = p.output[q];
    return r;
}

bool is_canonical(const Protocol& p, unsigned n) {
    // Lexicographically minimal encoding over permutations fixing the input
    // state (state 0 for enumerated protocols).
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const std::vector<int> own = encode(p);
    while (std::next_permutation(perm.begin() + 1, perm.end())) {
        if (encode(permuted(p, perm)) < own) return false;
    }
    return true;
}

}  // namespace

void enumerate_protocols(unsigned n, const EnumOptions& opts,
                         const std::function<bool(const Protocol&)>& yield) {
    if (n < 1 || n > opts.max_states)
        throw Error(ErrorCode::LimitExceeded, "state count outside configured enumeration range");

    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < static_cast<int>(n); ++a)
        for (int b = a; b < static_cast<int>(n); ++b) pairs.emplace_back(a, b);
    const std::size_t P = pairs.size();

    Protocol base;
    for (unsigned q = 0; q < n; ++q) base.states.push_back("q" + std::to_string(q));
    base.input_state = 0;
    base.leaders = Config(n);
    base.output.assign(n, 0);

    const unsigned long rhs_options = P;  // one multiset of size 2 per pair index
    const unsigned long per_pair =
        opts.deterministic ? rhs_options : ((1UL << rhs_options) - 1UL);

    std::vector<unsigned long> table(P, 0);
    bool stop = false;
    while (!stop) {
        for (unsigned long omask = 0; omask < (1UL << n) && !stop; ++omask) {
            Protocol p = base;
            for (unsigned q = 0; q < n; ++q) p.output[q] = (omask >> q) & 1UL;
            for (std::size_t i = 0; i < P; ++i) {
                if (opts.deterministic) {
                    auto [r, s] = pairs[table[i]];
                    p.transitions.push_back(Transition(pairs[i].first, pairs[i].second, r, s));
                } else {
                    unsigned long subset = table[i] + 1;  // nonempty subsets
                    for (std::size_t j = 0; j < rhs_options; ++j)
                        if ((subset >> j) & 1UL)
                            p.transitions.push_back(
                                Transition(pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second));
                }
            }
            p.sort_transitions();
            if (is_canonical(p, n)) {
                if (!yield(p)) stop = true;
            }
        }
        // odometer over the transition table
        std::size_t i = 0;
        while (i < P) {
            if (++table[i] < per_pair) break;
            table[i] = 0;
            ++i;
        }
        if (i == P) break;
    }
}

}  // namespace pp
