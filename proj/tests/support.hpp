#pragma once

// Shared helpers for the test suites: small random instances, brute-force
// oracles, and certificate mutation for the fuzz checks.

#include <functional>
#include <random>

#include "pp/bb.hpp"
#include "pp/io.hpp"

namespace testsupport {

using namespace pp;

inline Protocol random_protocol(std::mt19937& rng, unsigned min_states = 2,
                                unsigned max_states = 4) {
    std::uniform_int_distribution<unsigned> nd(min_states, max_states);
    const unsigned n = nd(rng);
    std::uniform_int_distribution<int> sd(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> bit(0, 1);
    Protocol p;
    for (unsigned q = 0; q < n; ++q) p.states.push_back("q" + std::to_string(q));
    p.input_state = 0;
    p.leaders = Config(n);
    for (unsigned q = 0; q < n; ++q) p.output.push_back(bit(rng));
    for (int a = 0; a < static_cast<int>(n); ++a)
        for (int b = a; b < static_cast<int>(n); ++b)
            p.transitions.push_back(Transition(a, b, sd(rng), sd(rng)));
    p.sort_transitions();
    return p;
}

inline Config random_config(std::mt19937& rng, std::size_t n, long min_size = 2,
                            long max_each = 5) {
    std::uniform_int_distribution<long> cd(0, max_each);
    Config c(n);
    do {
        for (std::size_t q = 0; q < n; ++q) c[q] = cd(rng);
    } while (c.size() < min_size);
    return c;
}

// Fires up to `len` random enabled transitions; stops early at deadlock.
inline std::vector<Transition> random_run(std::mt19937& rng, const Protocol& p, Config c,
                                          std::size_t len) {
    std::vector<Transition> run;
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<const Transition*> live;
        for (const auto& t : p.transitions)
            if (enabled(c, t)) live.push_back(&t);
        if (live.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
        const Transition& t = *live[pick(rng)];
        c = fire(p, c, t);
        run.push_back(t);
    }
    return run;
}

// All configurations of the given exact size over n states.
inline void each_config_of_size(std::size_t n, long size,
                                const std::function<void(const Config&)>& f) {
    Config c(n);
    std::function<void(std::size_t, long)> rec = [&](std::size_t q, long left) {
        if (q + 1 == n) {
            c[q] = left;
            f(c);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            c[q] = v;
            rec(q + 1, left - v);
        }
    };
    if (n == 0) return;
    rec(0, size);
}

// ---- brute-force Hilbert oracle -------------------------------------------

// Atoms of the solution monoid, by enumerating solutions in increasing
// 1-norm: m is kept iff no previously kept atom w <= m leaves a solution
// m - w.
inline std::vector<std::vector<Nat>> hilbert_oracle(const DiophSystem& sys, long radius) {
    std::vector<std::vector<Nat>> atoms;
    std::vector<long> v(sys.vars, 0);
    auto check = [&]() {
        std::vector<Nat> m(v.begin(), v.end());
        if (!sys.satisfied(m)) return;
        for (const auto& w : atoms) {
            bool le = true;
            std::vector<Nat> rest(m.size());
            for (std::size_t j = 0; j < m.size() && le; ++j) {
                if (w[j] > m[j]) le = false;
                else rest[j] = m[j] - w[j];
            }
            if (le && sys.satisfied(rest)) return;  // w + rest, both solutions
        }
        atoms.push_back(m);
    };
    std::function<void(std::size_t, long)> rec = [&](std::size_t j, long left) {
        if (j + 1 == sys.vars) {
            v[j] = left;
            check();
            return;
        }
        for (long x = 0; x <= left; ++x) {
            v[j] = x;
            rec(j + 1, left - x);
        }
    };
    for (long level = 1; level <= radius; ++level) rec(0, level);
    std::sort(atoms.begin(), atoms.end());
    return atoms;
}

// Random system whose Pottier bound stays brute-forceable.
inline DiophSystem random_system(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> vd(2, 4), ed(1, 3);
    std::uniform_int_distribution<int> ad(-2, 2);
    while (true) {
        DiophSystem sys;
        sys.vars = vd(rng);
        std::size_t e = ed(rng);
        for (std::size_t i = 0; i < e; ++i) {
            std::vector<Int> row(sys.vars);
            for (auto& a : row) a = ad(rng);
            sys.rows.push_back(std::move(row));
        }
        if (pottier_bound(sys) <= 80) return sys;
    }
}

// ---- certificate mutation fuzzing -----------------------------------------

inline void bump(Nat& v, std::mt19937& rng) {
    std::uniform_int_distribution<int> dd(-3, 3);
    int d = dd(rng);
    if (d == 0) d = 1;
    v += d;
    if (v < 0) v = 0;
}

inline Certificate mutate_certificate(std::mt19937& rng, const Certificate& cert,
                                      const Protocol& p) {
    Certificate m = cert;
    std::uniform_int_distribution<int> field(0, 7);
    std::uniform_int_distribution<std::size_t> qd(0, p.state_count() - 1);
    switch (field(rng)) {
        case 0: bump(m.a, rng); break;
        case 1: bump(m.b, rng); break;
        case 2: {
            std::size_t q = qd(rng);
            if (m.S.size() != p.state_count()) m.S.assign(p.state_count(), 0);
            m.S[q] = !m.S[q];
            break;
        }
        case 3: bump(m.E[qd(rng)], rng); break;
        case 4: bump(m.D_b[qd(rng)], rng); break;
        case 5:
            if (m.D.dim() == p.state_count()) bump(m.D[qd(rng)], rng);
            else bump(m.a, rng);
            break;
        case 6:
            if (!m.pi.mult.empty()) {
                std::uniform_int_distribution<std::size_t> td(0, m.pi.mult.size() - 1);
                bump(m.pi.mult[td(rng)], rng);
            } else {
                bump(m.b, rng);
            }
            break;
        default: {
            // drop or blank a witness
            if (!m.witnesses.empty()) {
                auto it = m.witnesses.begin();
                std::advance(it, rng() % m.witnesses.size());
                if (rng() % 2)
                    m.witnesses.erase(it);
                else
                    it->second = make_steps({});
            }
            break;
        }
    }
    return m;
}

// Independent semantic re-verification of an (accepted) certificate, sharing
// no code with check_certificate's stability test.
inline bool semantic_recheck(const Protocol& p, const Certificate& cert,
                             const Limits& limits = {}) {
    try {
        if (cert.b < 1 || cert.a < 2) return false;
        Config E = cert.E;
        if (cert.variant == CertVariant::leaderless) {
            if (replay(p, initial_configuration(p, cert.a), cert.witnesses.at("toD")) != cert.D)
                return false;
            if (replay(p, cert.D, cert.witnesses.at("DtoE")) != E) return false;
            Config icb = unit_config(p.state_count(), p.input_state, cert.b);
            if (apply_parikh(p, icb, cert.pi) != cert.D_b) return false;
            for (std::size_t q = 0; q < p.state_count(); ++q)
                if (cert.D[q] < 2 * cert.pi.size()) return false;
        } else {
            if (replay(p, initial_configuration(p, cert.a), cert.witnesses.at("toE")) != E)
                return false;
            Config bx = unit_config(p.state_count(), p.input_state, cert.b);
            bool ok = false;
            try {
                ok = replay(p, E + bx, cert.witnesses.at("pump")) == E + cert.D_b;
            } catch (const Error&) {
            }
            if (!ok) {
                try {
                    ok = replay(p, bx, cert.witnesses.at("pump")) == cert.D_b;
                } catch (const Error&) {
                }
            }
            if (!ok) return false;
        }
        for (std::size_t q = 0; q < p.state_count(); ++q)
            if (!(q < cert.S.size() && cert.S[q]) && cert.D_b[q] != 0) return false;
        if (!cert.D_b.nonnegative()) return false;
        int b_out = output_of(p, E);
        if (b_out == -1) return false;
        // E + N^S stable <=> some ideal of the decomposition has S free and
        // admits E outside it
        IdealDecomposition dec = stable_set_ideals(p, b_out == 1 ? '1' : '0', limits);
        for (const Ideal& ideal : dec.ideals) {
            bool s_free = true;
            for (std::size_t q = 0; q < p.state_count() && s_free; ++q)
                if (q < cert.S.size() && cert.S[q] && !(q < ideal.free.size() && ideal.free[q]))
                    s_free = false;
            if (s_free && ideal_member(E, ideal)) return true;
        }
        return false;
    } catch (const Error&) {
        return false;
    } catch (const std::out_of_range&) {
        return false;
    }
}

}  // namespace testsupport
