#include "pp/semantics.hpp"

namespace pp {

bool enabled(const Config& c, const Transition& t) {
    if (t.p == t.q) return c[static_cast<std::size_t>(t.p)] >= 2;
    return c[static_cast<std::size_t>(t.p)] >= 1 && c[static_cast<std::size_t>(t.q)] >= 1;
}

Config fire(const Protocol& p, const Config& c, const Transition& t) {
    (void)p;
    if (!enabled(c, t))
        throw Error(ErrorCode::NotEnabled, "transition not enabled");
    Config r = c;
    r[static_cast<std::size_t>(t.p)] -= 1;
    r[static_cast<std::size_t>(t.q)] -= 1;
    r[static_cast<std::size_t>(t.r)] += 1;
    r[static_cast<std::size_t>(t.s)] += 1;
    return r;
}

Displacement displacement(const Protocol& p, const Transition& t) {
    Displacement d(p.state_count());
    d[static_cast<std::size_t>(t.p)] -= 1;
    d[static_cast<std::size_t>(t.q)] -= 1;
    d[static_cast<std::size_t>(t.r)] += 1;
    d[static_cast<std::size_t>(t.s)] += 1;
    return d;
}

Nat TransitionMultiset::size() const {
    Nat s = 0;
    for (const auto& m : mult) s += m;
    return s;
}

TransitionMultiset parikh(const Protocol& p, const std::vector<Transition>& sigma) {
    TransitionMultiset pi(p.transitions.size());
    for (const auto& t : sigma) {
        int i = p.transition_index(t);
        if (i < 0) throw Error(ErrorCode::Internal, "transition not in protocol");
        pi.mult[static_cast<std::size_t>(i)] += 1;
    }
    return pi;
}

Displacement displacement(const Protocol& p, const TransitionMultiset& pi) {
    Displacement d(p.state_count());
    for (std::size_t i = 0; i < pi.mult.size(); ++i) {
        if (pi.mult[i] == 0) continue;
        const Transition& t = p.transitions[i];
        d[static_cast<std::size_t>(t.p)] -= pi.mult[i];
        d[static_cast<std::size_t>(t.q)] -= pi.mult[i];
        d[static_cast<std::size_t>(t.r)] += pi.mult[i];
        d[static_cast<std::size_t>(t.s)] += pi.mult[i];
    }
    return d;
}

Config apply_parikh(const Protocol& p, const Config& c, const TransitionMultiset& pi) {
    Displacement d = displacement(p, pi);
    Config r = c;
    if (r.dim() < d.size()) r.counts.resize(d.size());
    for (std::size_t q = 0; q < d.size(); ++q) r[q] += d[q];
    if (!r.nonnegative())
        throw Error(ErrorCode::NegativeCount, "potential step leaves a negative coordinate");
    return r;
}

std::vector<Transition> realize(const Protocol& p, const Config& c, const TransitionMultiset& pi) {
    Nat need = 2 * pi.size();
    for (std::size_t q = 0; q < p.state_count(); ++q)
        if (c[q] < need)
            throw Error(ErrorCode::NotSaturated, "configuration is not 2|pi|-saturated");
    apply_parikh(p, c, pi);  // validates non-negativity of the target
    std::vector<Transition> sigma;
    for (std::size_t i = 0; i < pi.mult.size(); ++i) {
        Nat k = pi.mult[i];
        while (k > 0) {
            sigma.push_back(p.transitions[i]);
            --k;
        }
    }
    return sigma;
}

WitnessPtr make_steps(std::vector<Transition> steps) {
    auto w = std::make_shared<Witness>();
    w->node = StepsWitness{std::move(steps)};
    return w;
}

WitnessPtr make_concat(std::vector<WitnessPtr> parts) {
    auto w = std::make_shared<Witness>();
    w->node = ConcatWitness{std::move(parts)};
    return w;
}

WitnessPtr make_repeat(WitnessPtr body, Nat count, Config base, Config consume, Config produce) {
    auto w = std::make_shared<Witness>();
    w->node = RepeatWitness{std::move(body), std::move(count), std::move(base),
                            std::move(consume), std::move(produce)};
    return w;
}

Config replay(const Protocol& p, const Config& c, const Witness& w) {
    if (const auto* steps = std::get_if<StepsWitness>(&w.node)) {
        Config cur = c;
        for (const auto& t : steps->steps) cur = fire(p, cur, t);
        return cur;
    }
    if (const auto* cat = std::get_if<ConcatWitness>(&w.node)) {
        Config cur = c;
        for (const auto& part : cat->parts) cur = replay(p, cur, *part);
        return cur;
    }
    const auto& rep = std::get<RepeatWitness>(w.node);
    if (rep.count < 0 || !rep.consume.nonnegative() || !rep.produce.nonnegative())
        throw Error(ErrorCode::RepeatMismatch, "negative count or multisets in Repeat");
    if (c != rep.base + rep.count * rep.consume)
        throw Error(ErrorCode::RepeatMismatch, "configuration does not match base + count*consume");
    Config after = replay(p, rep.base + rep.consume, *rep.body);
    if (after != rep.base + rep.produce)
        throw Error(ErrorCode::RepeatMismatch, "body does not map base+consume to base+produce");
    return rep.base + rep.count * rep.produce;
}

Config replay(const Protocol& p, const Config& c, const WitnessPtr& w) {
    return replay(p, c, *w);
}

}  // namespace pp
