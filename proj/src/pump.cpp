#include "pp/pump.hpp"

#include <algorithm>
#include <deque>

namespace pp {

namespace {

// Path from the BFS root to target, as fired transitions.
std::vector<Transition> bfs_path(const Protocol& p, const ReachGraph& g, int target) {
    std::vector<int> parent(g.nodes.size(), -2);
    std::vector<int> via(g.nodes.size(), -1);
    parent[static_cast<std::size_t>(g.root)] = -1;
    std::deque<int> queue{g.root};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == target) break;
        for (const auto& [ti, v] : g.edges[static_cast<std::size_t>(u)]) {
            if (parent[static_cast<std::size_t>(v)] == -2) {
                parent[static_cast<std::size_t>(v)] = u;
                via[static_cast<std::size_t>(v)] = ti;
                queue.push_back(v);
            }
        }
    }
    if (parent[static_cast<std::size_t>(target)] == -2)
        throw Error(ErrorCode::Internal, "path target not reachable in graph");
    std::vector<Transition> path;
    for (int u = target; parent[static_cast<std::size_t>(u)] != -1;
         u = parent[static_cast<std::size_t>(u)])
        path.push_back(p.transitions[static_cast<std::size_t>(via[static_cast<std::size_t>(u)])]);
    std::reverse(path.begin(), path.end());
    return path;
}

struct StableHit {
    Config c;
    WitnessPtr witness;
};

// First (BFS order) configuration reachable from `from` that is stable for
// either output, with its path.
StableHit reach_stable_config(const Protocol& p, const Config& from, const Limits& limits) {
    ReachGraph g = reachable_configs(p, from, limits);
    GraphAnalysis a0 = analyze_stability(p, g, 0);
    GraphAnalysis a1 = analyze_stability(p, g, 1);
    for (std::size_t node = 0; node < g.nodes.size(); ++node) {
        if (a0.stable[node] || a1.stable[node]) {
            StableHit hit;
            hit.c = from_key(g.nodes[node]);
            hit.witness = make_steps(bfs_path(p, g, static_cast<int>(node)));
            return hit;
        }
    }
    throw Error(ErrorCode::NoStableReached, "no stable configuration reachable");
}

CheckResult reject(const std::string& condition) { return CheckResult{false, condition}; }

// E + N^S subset of the b-stable set, decided by backward coverability from
// the wrong-output units: every minimal predecessor must exceed E somewhere
// outside S.
bool pumped_stable(const Protocol& p, const Config& E, const std::vector<char>& S, int b,
                   const Limits& limits) {
    Antichain targets;
    for (std::size_t q = 0; q < p.state_count(); ++q)
        if (p.output[q] != b) targets.push_back(unit_config(p.state_count(), static_cast<int>(q)));
    Antichain basis = backward_coverability(p, targets, limits);
    for (const Config& m : basis) {
        bool covered_via_S = true;
        for (std::size_t q = 0; q < p.state_count() && covered_via_S; ++q)
            if (!(q < S.size() && S[q]) && m[q] > E[q]) covered_via_S = false;
        if (covered_via_S) return false;
    }
    return true;
}

bool in_free_states(const Config& c, const std::vector<char>& S) {
    for (std::size_t q = 0; q < c.dim(); ++q)
        if (!(q < S.size() && S[q]) && c[q] != 0) return false;
    return true;
}

}  // namespace

CheckResult check_certificate(const Protocol& p, const Certificate& cert, const Limits& limits) {
    if (cert.b < 1) return reject("b-positive: pump size must be at least 1");
    if (cert.a < 2) return reject("a-domain: certified bound below the input domain");
    if (!cert.D_b.nonnegative() || cert.D_b.dim() != p.state_count())
        return reject("Db-shape: malformed pump result");
    if (!in_free_states(cert.D_b, cert.S)) return reject("Db-in-S: pump result leaves S");

    int b_out = output_of(p, cert.E);
    if (b_out == -1) return reject("E-output: reached configuration has mixed outputs");

    if (cert.variant == CertVariant::leaderless) {
        if (!p.leaderless()) return reject("variant: leaderless certificate for a leader protocol");
        auto toD = cert.witnesses.find("toD");
        auto DtoE = cert.witnesses.find("DtoE");
        if (toD == cert.witnesses.end() || DtoE == cert.witnesses.end())
            return reject("witness-missing: toD/DtoE required");
        try {
            if (replay(p, initial_configuration(p, cert.a), toD->second) != cert.D)
                return reject("replay-toD: witness does not land on D");
            if (replay(p, cert.D, DtoE->second) != cert.E)
                return reject("replay-DtoE: witness does not land on E");
        } catch (const Error& e) {
            return reject(std::string("replay: ") + e.what());
        }
        try {
            Config icb = unit_config(p.state_count(), p.input_state, cert.b);
            if (apply_parikh(p, icb, cert.pi) != cert.D_b)
                return reject("pump-parikh: IC(b) does not step to D_b via pi");
        } catch (const Error& e) {
            return reject(std::string("pump-parikh: ") + e.what());
        }
        Nat need = 2 * cert.pi.size();
        for (std::size_t q = 0; q < p.state_count(); ++q)
            if (cert.D[q] < need) return reject("saturation: D is not 2|pi|-saturated");
    } else {
        auto toE = cert.witnesses.find("toE");
        auto pump = cert.witnesses.find("pump");
        if (toE == cert.witnesses.end() || pump == cert.witnesses.end())
            return reject("witness-missing: toE/pump required");
        try {
            if (replay(p, initial_configuration(p, cert.a), toE->second) != cert.E)
                return reject("replay-toE: witness does not land on E");
        } catch (const Error& e) {
            return reject(std::string("replay-toE: ") + e.what());
        }
        Config bx = unit_config(p.state_count(), p.input_state, cert.b);
        bool pumped = false;
        try {
            pumped = replay(p, cert.E + bx, pump->second) == cert.E + cert.D_b;
        } catch (const Error&) {
        }
        if (!pumped) {
            // literal form: b*x ->* D_b on its own
            try {
                pumped = replay(p, bx, pump->second) == cert.D_b;
            } catch (const Error&) {
            }
        }
        if (!pumped) return reject("replay-pump: E + b*x does not reach E + D_b");
    }

    if (!pumped_stable(p, cert.E, cert.S, b_out, limits))
        return reject("E-stability: E + N^S is not contained in the stable set");
    return CheckResult{true, ""};
}

namespace {

Nat pow2_exact(const Nat& exponent) {
    if (exponent > 4'000'000)
        throw Error(ErrorCode::LimitExceeded, "power of two too large to materialise");
    return Nat(1) << exponent.convert_to<unsigned>();
}

}  // namespace

Nat Constants::beta() const { return pow2_exact(beta_exponent); }
Nat Constants::theta() const { return pow2_exact(theta_exponent); }
Nat Constants::final_bound() const {
    return xi * n * beta() * pow_nat(3, n);
}

bool final_bound_holds(unsigned n, std::size_t transition_count) {
    Nat xi = 2 * pow_nat(2 * Nat(transition_count) + 1, n);
    Nat beta_exp = 2 * factorial(2 * n + 1) + 1;
    Nat theta_exp = factorial(2 * n + 2);
    // xi*n*beta*3^n <= theta reduces to the power-of-two-free comparison
    return le_pow2(xi * n * pow_nat(3, n), theta_exp - beta_exp);
}

std::size_t max_transition_count(unsigned n) {
    std::size_t pairs = static_cast<std::size_t>(n) * (n + 1) / 2;
    return pairs * pairs;
}

Constants theoretical_constants(const Protocol& p) {
    Constants c;
    c.n = static_cast<unsigned>(p.state_count());
    c.transition_count = p.transitions.size();
    c.xi = 2 * pow_nat(2 * Nat(c.transition_count) + 1, c.n);
    c.beta_exponent = 2 * factorial(2 * c.n + 1) + 1;
    c.theta_exponent = factorial(2 * c.n + 2);
    c.final_bound_ok = final_bound_holds(c.n, c.transition_count);
    if (c.n >= 2 && !c.final_bound_ok)
        throw Error(ErrorCode::Internal, "final bound inequality failed");
    return c;
}

Transition find_escaping_transition(const Protocol& p, const std::vector<char>& supp) {
    const std::size_t n = p.state_count();
    if (supp.size() != n || !supp[static_cast<std::size_t>(p.input_state)])
        throw Error(ErrorCode::PreconditionFailed, "support must contain the input state");
    if (std::all_of(supp.begin(), supp.end(), [](char s) { return s != 0; }))
        throw Error(ErrorCode::PreconditionFailed, "support must be a strict subset");
    for (const Transition& t : p.transitions) {
        if (supp[static_cast<std::size_t>(t.p)] && supp[static_cast<std::size_t>(t.q)] &&
            (!supp[static_cast<std::size_t>(t.r)] || !supp[static_cast<std::size_t>(t.s)]))
            return t;
    }
    throw Error(ErrorCode::NoEscape, "no transition leaves the support");
}

Saturation saturation_sequence(const Protocol& p) {
    if (!p.leaderless())
        throw Error(ErrorCode::PreconditionFailed, "saturation sequence requires a leaderless protocol");
    CoverableStates cov = coverable_states(p);
    if (!std::all_of(cov.states.begin(), cov.states.end(), [](char s) { return s != 0; }))
        throw Error(ErrorCode::PreconditionFailed, "all states must be coverable");
    const std::size_t n = p.state_count();
    Saturation sat;
    std::vector<char> supp(n, 0);
    supp[static_cast<std::size_t>(p.input_state)] = 1;
    while (!std::all_of(supp.begin(), supp.end(), [](char s) { return s != 0; })) {
        Transition t = find_escaping_transition(p, supp);
        std::vector<Transition> tripled;
        for (int rep = 0; rep < 3; ++rep)
            tripled.insert(tripled.end(), sat.sigma.begin(), sat.sigma.end());
        tripled.push_back(t);
        sat.sigma = std::move(tripled);
        supp[static_cast<std::size_t>(t.r)] = 1;
        supp[static_cast<std::size_t>(t.s)] = 1;
        ++sat.j;
    }
    Config c = unit_config(n, p.input_state, pow_nat(3, sat.j));
    for (const Transition& t : sat.sigma) c = fire(p, c, t);
    for (std::size_t q = 0; q < n; ++q)
        if (c[q] < 1) throw Error(ErrorCode::Internal, "saturation result is not 1-saturated");
    sat.result = c;
    return sat;
}

std::vector<ChainEntry> stabilization_chain(const Protocol& p, long i_max, const Limits& limits) {
    if (i_max < 2) throw Error(ErrorCode::PreconditionFailed, "i_max must be at least 2");
    std::vector<ChainEntry> chain;
    for (long i = 2; i <= i_max; ++i) {
        Config from = chain.empty()
                          ? initial_configuration(p, 2)
                          : chain.back().c + unit_config(p.state_count(), p.input_state);
        StableHit hit = reach_stable_config(p, from, limits);
        ChainEntry entry;
        entry.c = hit.c;
        if (chain.empty()) {
            entry.step = nullptr;
            entry.full = hit.witness;
        } else {
            entry.step = hit.witness;
            entry.full = make_concat({chain.back().full, hit.witness});
        }
        chain.push_back(std::move(entry));
    }
    return chain;
}

std::optional<Certificate> pump_search_leaders(const Protocol& p, long i_max,
                                               const Limits& limits) {
    std::vector<ChainEntry> chain = stabilization_chain(p, i_max, limits);
    IdealDecomposition decomp = stable_set_ideals(p, 'S', limits);
    for (std::size_t l = 1; l < chain.size(); ++l) {
        for (std::size_t k = 0; k < l; ++k) {
            if (!leq(chain[k].c, chain[l].c)) continue;
            Config diff = chain[l].c - chain[k].c;
            for (const Ideal& ideal : decomp.ideals) {
                if (!ideal_member(chain[k].c, ideal) || !ideal_member(chain[l].c, ideal) ||
                    !in_free_states(diff, ideal.free))
                    continue;
                Certificate cert;
                cert.variant = CertVariant::withLeaders;
                cert.a = Nat(k) + 2;
                cert.b = Nat(l - k);
                cert.S = ideal.free;
                cert.E = chain[k].c;
                cert.D_b = diff;
                cert.witnesses["toE"] = chain[k].full;
                std::vector<WitnessPtr> pump_parts;
                for (std::size_t i = k + 1; i <= l; ++i) pump_parts.push_back(chain[i].step);
                cert.witnesses["pump"] = make_concat(std::move(pump_parts));
                return cert;
            }
        }
    }
    return std::nullopt;
}

Concentration concentrate(const Protocol& p, const Nat& k, const Config& D,
                          const WitnessPtr& witness_to_D, const Limits& limits) {
    if (witness_to_D) {
        if (replay(p, initial_configuration(p, D.size()), witness_to_D) != D)
            throw Error(ErrorCode::PreconditionFailed, "witness does not reach D from IC(|D|)");
    }
    IdealDecomposition decomp = stable_set_ideals(p, 'S', limits);
    ReachGraph g = reachable_configs(p, D, limits);
    GraphAnalysis a0 = analyze_stability(p, g, 0);
    GraphAnalysis a1 = analyze_stability(p, g, 1);
    for (std::size_t node = 0; node < g.nodes.size(); ++node) {
        if (!a0.stable[node] && !a1.stable[node]) continue;
        Config e = from_key(g.nodes[node]);
        for (const Ideal& ideal : decomp.ideals) {
            if (!ideal_member(e, ideal)) continue;
            Int off = 0;
            for (std::size_t q = 0; q < e.dim(); ++q)
                if (!(q < ideal.free.size() && ideal.free[q])) off += e[q];
            if (k * off <= e.size()) {
                Concentration conc;
                conc.ideal = ideal;
                conc.E = e;
                conc.witness = make_steps(bfs_path(p, g, static_cast<int>(node)));
                return conc;
            }
        }
    }
    throw Error(ErrorCode::NoStableReached, "no concentrated stable configuration reachable");
}

TransitionMultiset witness_parikh(const Protocol& p, const WitnessPtr& w) {
    if (!w) return TransitionMultiset(p.transitions.size());
    TransitionMultiset out(p.transitions.size());
    if (const auto* steps = std::get_if<StepsWitness>(&w->node)) {
        out = parikh(p, steps->steps);
    } else if (const auto* concat = std::get_if<ConcatWitness>(&w->node)) {
        for (const auto& part : concat->parts) {
            TransitionMultiset pk = witness_parikh(p, part);
            for (std::size_t i = 0; i < out.mult.size(); ++i) out.mult[i] += pk.mult[i];
        }
    } else {
        const auto& rep = std::get<RepeatWitness>(w->node);
        TransitionMultiset pk = witness_parikh(p, rep.body);
        for (std::size_t i = 0; i < out.mult.size(); ++i) out.mult[i] = rep.count * pk.mult[i];
    }
    return out;
}

Certificate build_leaderless_certificate(const Protocol& p, const Limits& limits) {
    if (!p.leaderless())
        throw Error(ErrorCode::PreconditionFailed, "the pipeline handles leaderless protocols only");
    const std::size_t n = p.state_count();
    Saturation sat = saturation_sequence(p);
    const Nat unit = pow_nat(3, sat.j);  // |sat.result|
    const Nat xi = pottier_constant(p);
    WitnessPtr sigma_w = make_steps(sat.sigma);
    const Config ic_unit = unit_config(n, p.input_state, unit);

    // Find a stable configuration entirely inside the free states of a stable
    // ideal, at a small multiple of the saturated configuration. Asking for
    // concentration 1/(|D|+1) forces the count outside S to zero.
    std::optional<Concentration> conc;
    Nat c = 0;
    for (Nat c0 = 1; c0 <= 32; ++c0) {
        Config d_small = c0 * sat.result;
        if (d_small.size() < 2) continue;
        WitnessPtr w = make_repeat(sigma_w, c0, Config(n), ic_unit, sat.result);
        try {
            conc = concentrate(p, Nat(d_small.size() + 1), d_small, w, limits);
            c = c0;
            break;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoStableReached) throw;
        }
    }
    if (!conc)
        throw Error(ErrorCode::NoStableReached,
                    "no fully concentrated stable configuration found at small scale");

    const std::vector<char>& S = conc->ideal.free;
    const Nat M = (xi + c - 1) / c;  // M*c >= xi, so D below is xi-saturated
    const Nat a = M * c * unit;
    Config D = (M * c) * sat.result;
    Config E = M * conc->E;
    WitnessPtr w_toD = make_repeat(sigma_w, M * c, Config(n), ic_unit, sat.result);
    WitnessPtr w_DtoE = make_repeat(conc->witness, M, Config(n), c * sat.result, conc->E);

    TransitionMultiset pi_total =
        witness_parikh(p, make_concat({w_toD, w_DtoE}));
    AllEmptyResult ae = allempty_extract(p, a, pi_total, S, limits);
    Nat b = ae.input_size;
    TransitionMultiset theta = ae.theta;
    Config D_b = ae.reached;
    if (b == 0) {
        // Degenerate extraction; fall back to pumping bare input agents, which
        // is only meaningful when the input state itself is free.
        if (!(static_cast<std::size_t>(p.input_state) < S.size() &&
              S[static_cast<std::size_t>(p.input_state)]))
            throw Error(ErrorCode::Internal, "empty extraction with input state outside S");
        b = 2;
        theta = TransitionMultiset(p.transitions.size());
        D_b = unit_config(n, p.input_state, 2);
    }
    if (2 * theta.size() > M * c)
        throw Error(ErrorCode::Internal, "extracted multiset exceeds the saturation level");

    Certificate cert;
    cert.variant = CertVariant::leaderless;
    cert.a = a;
    cert.b = b;
    cert.S = S;
    cert.E = E;
    cert.D = D;
    cert.pi = theta;
    cert.D_b = D_b;
    cert.witnesses["toD"] = w_toD;
    cert.witnesses["DtoE"] = w_DtoE;
    return cert;
}

}  // namespace pp
