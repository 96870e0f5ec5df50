#include "pp/bb.hpp"

namespace pp {

namespace {

// The output the protocol converges to on input i, or -1 if some reachable
// configuration cannot reach either stable set (no convergence under
// fairness).
int decided_output(const Protocol& p, long i, const Limits& limits) {
    ReachGraph g = reachable_configs(p, initial_configuration(p, i), limits);
    for (int b : {0, 1}) {
        GraphAnalysis an = analyze_stability(p, g, b);
        bool all = true;
        for (std::size_t node = 0; node < g.nodes.size() && all; ++node)
            if (!an.can_reach_stable[node]) all = false;
        if (all) return b;
    }
    return -1;
}

}  // namespace

ClassifyResult classify_protocol(const Protocol& p, const Limits& limits, long cutoff) {
    Protocol q = normalize_protocol(p, true).protocol;
    ClassifyResult res;

    bool have_a = false;
    try {
        Certificate cert = build_leaderless_certificate(q, limits);
        if (check_certificate(q, cert, limits).accepted) {
            res.bound_a = cert.a;
            have_a = true;
        }
    } catch (const Error&) {
    }

    long scan_to = cutoff;
    if (have_a) {
        if (res.bound_a < scan_to) scan_to = res.bound_a.convert_to<long>();
    } else {
        scan_to = std::min(scan_to, 64L);  // no bound, scanning far proves nothing
    }

    long flip = -1;       // least accepted input
    bool monotone = true;
    int prev = -1;
    try {
        for (long i = 2; i <= scan_to; ++i) {
            int d = decided_output(q, i, limits);
            if (d == -1) {
                res.verdict = ProtocolClass::DoesNotCompute;
                return res;
            }
            if (d == 1 && flip == -1) flip = i;
            if (prev == 1 && d == 0) monotone = false;
            prev = d;
        }
    } catch (const Error&) {
        res.verdict = ProtocolClass::Undecided;
        return res;
    }

    bool covered_bound = have_a && Nat(scan_to) >= res.bound_a;
    if (!monotone) {
        // decided outputs disagree with every threshold predicate
        res.verdict = ProtocolClass::NonThreshold;
        return res;
    }
    if (flip == -1) {
        res.verdict = covered_bound ? ProtocolClass::NonThreshold : ProtocolClass::Undecided;
        return res;
    }
    res.eta = flip;
    Verdict confirm = verify_threshold(q, res.eta, scan_to, limits);
    if (!confirm.accept) {
        res.verdict = ProtocolClass::Undecided;
        return res;
    }
    res.verdict = have_a ? ProtocolClass::ComputesThreshold : ProtocolClass::Undecided;
    res.fully_certified = covered_bound;
    return res;
}

BBReport busy_beaver_search(unsigned n, const Limits& limits, bool deterministic) {
    if (n < 1 || n > 3)
        throw Error(ErrorCode::PreconditionFailed, "search supported for 1 <= n <= 3");
    BBReport report;
    report.n = n;
    const long cutoff = n <= 2 ? 5000 : 12;
    EnumOptions opts;
    opts.deterministic = deterministic;
    enumerate_protocols(n, opts, [&](const Protocol& p) {
        BBEntry entry;
        entry.protocol = normalize_protocol(p, true).protocol;
        entry.result = classify_protocol(p, limits, cutoff);
        if (entry.result.verdict == ProtocolClass::ComputesThreshold &&
            !entry.result.fully_certified)
            entry.result.verdict = ProtocolClass::Undecided;
        switch (entry.result.verdict) {
            case ProtocolClass::ComputesThreshold:
                ++report.computes;
                if (!report.best || entry.result.eta > report.best->second)
                    report.best = {entry.protocol, entry.result.eta};
                break;
            case ProtocolClass::NonThreshold: ++report.non_threshold; break;
            case ProtocolClass::DoesNotCompute: ++report.does_not_compute; break;
            case ProtocolClass::Undecided: ++report.undecided; break;
        }
        report.table.push_back(std::move(entry));
        return true;
    });
    return report;
}

}  // namespace pp
