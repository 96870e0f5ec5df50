#include "pp/dioph.hpp"

#include <algorithm>
#include <set>

namespace pp {

bool DiophSystem::satisfied(const std::vector<Nat>& m) const {
    for (const auto& row : rows) {
        Int acc = 0;
        for (std::size_t j = 0; j < vars; ++j) acc += row[j] * m[j];
        if (acc < 0) return false;
    }
    return true;
}

namespace {

using Vec = std::vector<long long>;

// Contejean-Devie completion for the homogeneous equality system A'z = 0
// obtained by adding one slack column per inequality.
std::vector<Vec> equality_minimal_solutions(const DiophSystem& sys, const Limits& limits) {
    const std::size_t v = sys.vars;
    const std::size_t e = sys.rows.size();
    const std::size_t dim = v + e;
    // value(z) = A'z as a length-e vector
    auto column_value = [&](std::size_t j) {
        std::vector<long long> val(e, 0);
        if (j < v) {
            for (std::size_t i = 0; i < e; ++i) val[i] = sys.rows[i][j].convert_to<long long>();
        } else {
            val[j - v] = -1;
        }
        return val;
    };
    std::vector<std::vector<long long>> col_values;
    for (std::size_t j = 0; j < dim; ++j) col_values.push_back(column_value(j));

    std::vector<Vec> basis;
    auto dominated_by_basis = [&](const Vec& z) {
        for (const auto& b : basis) {
            bool le = true;
            for (std::size_t j = 0; j < dim && le; ++j)
                if (b[j] > z[j]) le = false;
            if (le) return true;
        }
        return false;
    };

    std::set<Vec> frontier;
    for (std::size_t j = 0; j < dim; ++j) {
        Vec unit(dim, 0);
        unit[j] = 1;
        frontier.insert(unit);
    }
    std::size_t processed = 0;
    while (!frontier.empty()) {
        std::set<Vec> next;
        for (const Vec& z : frontier) {
            if (++processed > limits.max_frontier)
                throw Error(ErrorCode::LimitExceeded, "Hilbert completion frontier limit exceeded");
            if (dominated_by_basis(z)) continue;
            std::vector<long long> val(e, 0);
            for (std::size_t j = 0; j < dim; ++j)
                if (z[j])
                    for (std::size_t i = 0; i < e; ++i) val[i] += z[j] * col_values[j][i];
            bool zero = std::all_of(val.begin(), val.end(), [](long long x) { return x == 0; });
            if (zero) {
                basis.push_back(z);
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                long long dot = 0;
                for (std::size_t i = 0; i < e; ++i) dot += val[i] * col_values[j][i];
                if (dot < 0) {
                    Vec u = z;
                    u[j] += 1;
                    if (!dominated_by_basis(u)) next.insert(std::move(u));
                }
            }
        }
        frontier.swap(next);
    }
    return basis;
}

bool leq_vec(const std::vector<Nat>& a, const std::vector<Nat>& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

// Can target be written as a N-combination of the given elements?
bool combination_exists(const std::vector<Nat>& target,
                        const std::vector<std::vector<Nat>>& elements, std::size_t idx,
                        std::vector<Nat>* out_mult) {
    bool zero = std::all_of(target.begin(), target.end(), [](const Nat& x) { return x == 0; });
    if (zero) return true;
    if (idx >= elements.size()) return false;
    const auto& b = elements[idx];
    Nat maxk = -1;
    for (std::size_t j = 0; j < target.size(); ++j) {
        if (b[j] > 0) {
            Nat k = target[j] / b[j];
            if (maxk < 0 || k < maxk) maxk = k;
        }
    }
    if (maxk < 0) maxk = 0;  // zero element cannot occur; guard anyway
    for (Nat k = maxk; k >= 0; --k) {
        std::vector<Nat> rest(target.size());
        for (std::size_t j = 0; j < target.size(); ++j) rest[j] = target[j] - k * b[j];
        if (combination_exists(rest, elements, idx + 1, out_mult)) {
            if (out_mult) (*out_mult)[idx] = k;
            return true;
        }
    }
    return false;
}

}  // namespace

HilbertBasis hilbert_basis(const DiophSystem& sys, const Limits& limits) {
    auto eq_basis = equality_minimal_solutions(sys, limits);
    std::set<std::vector<Nat>> projected;
    for (const auto& z : eq_basis) {
        std::vector<Nat> y(sys.vars);
        for (std::size_t j = 0; j < sys.vars; ++j) y[j] = z[j];
        projected.insert(std::move(y));
    }
    // Keep only indecomposable elements: the projection may contain solutions
    // that are sums of other projected solutions.
    std::vector<std::vector<Nat>> all(projected.begin(), projected.end());
    HilbertBasis basis;
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::vector<std::vector<Nat>> others;
        for (std::size_t j = 0; j < all.size(); ++j)
            if (j != i && leq_vec(all[j], all[i])) others.push_back(all[j]);
        if (!combination_exists(all[i], others, 0, nullptr)) basis.elements.push_back(all[i]);
    }
    std::sort(basis.elements.begin(), basis.elements.end());
    return basis;
}

Nat pottier_bound(const DiophSystem& sys) {
    if (sys.rows.empty()) return 1;
    Nat max_row = 0;
    for (const auto& row : sys.rows) {
        Nat s = 0;
        for (const auto& a : row) s += abs(a);
        if (s > max_row) max_row = s;
    }
    return pow_nat(1 + max_row, static_cast<unsigned>(sys.rows.size()));
}

DiophSystem realisable_system(const Protocol& p) {
    DiophSystem sys;
    sys.vars = p.transitions.size();
    for (std::size_t q = 0; q < p.state_count(); ++q) {
        if (static_cast<int>(q) == p.input_state) continue;
        std::vector<Int> row(sys.vars);
        for (std::size_t ti = 0; ti < p.transitions.size(); ++ti)
            row[ti] = displacement(p, p.transitions[ti])[q];
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

Nat pottier_constant(const Protocol& p, bool deterministic_variant) {
    const unsigned n = static_cast<unsigned>(p.state_count());
    if (deterministic_variant) return 2 * pow_nat(Nat(n) + 2, n);
    return 2 * pow_nat(2 * Nat(p.transitions.size()) + 1, n);
}

std::vector<RealisableBasisElement> realisable_basis(const Protocol& p, const Limits& limits) {
    DiophSystem sys = realisable_system(p);
    HilbertBasis hb = hilbert_basis(sys, limits);
    const Nat xi = pottier_constant(p);
    std::vector<RealisableBasisElement> out;
    for (const auto& y : hb.elements) {
        RealisableBasisElement el;
        el.pi.mult = y;
        Displacement d = displacement(p, el.pi);
        Int dx = d[static_cast<std::size_t>(p.input_state)];
        el.input_size = dx < 0 ? -dx : Int(0);
        if (el.input_size < 2) el.input_size = 2;  // an input multiset has size >= 2
        el.result = unit_config(p.state_count(), p.input_state, el.input_size);
        for (std::size_t q = 0; q < p.state_count(); ++q) el.result[q] += d[q];
        if (2 * el.pi.size() > xi || el.input_size > xi || el.result.size() > xi)
            throw Error(ErrorCode::Internal, "realisable basis element violates the Pottier constant bounds");
        out.push_back(std::move(el));
    }
    return out;
}

std::vector<Nat> decompose_solution(const std::vector<Nat>& m, const DiophSystem& sys,
                                    const HilbertBasis& basis) {
    if (m.size() != sys.vars || !sys.satisfied(m))
        throw Error(ErrorCode::NotASolution, "vector is not a solution of the system");
    // Greedy max-batch subtraction. Over a complete basis one pass suffices:
    // after removing the largest feasible multiple of an element, no
    // decomposition of the remainder can use that element again, or the
    // multiple was not largest.
    std::vector<Nat> mult(basis.elements.size());
    std::vector<Nat> rest = m;
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
        const auto& b = basis.elements[i];
        Nat k = -1;
        for (std::size_t j = 0; j < sys.vars; ++j)
            if (b[j] > 0) {
                Nat cap = rest[j] / b[j];
                if (k < 0 || cap < k) k = cap;
            }
        if (k <= 0) continue;
        // keep the remainder a solution: every row must stay non-negative
        for (const auto& row : sys.rows) {
            Int rb = 0, rr = 0;
            for (std::size_t j = 0; j < sys.vars; ++j) {
                rb += row[j] * b[j];
                rr += row[j] * rest[j];
            }
            if (rb > 0) {
                Nat cap = rr / rb;
                if (cap < k) k = cap;
            }
        }
        if (k <= 0) continue;
        for (std::size_t j = 0; j < sys.vars; ++j) rest[j] -= k * b[j];
        mult[i] = k;
    }
    for (const auto& r : rest)
        if (r != 0)
            throw Error(ErrorCode::NoDecomposition, "solution does not decompose over the basis");
    return mult;
}

AllEmptyResult allempty_extract(const Protocol& p, const Nat& input, const TransitionMultiset& pi,
                                const std::vector<char>& S, const Limits& limits) {
    const std::size_t n = p.state_count();
    const std::size_t x = static_cast<std::size_t>(p.input_state);
    Config ic = unit_config(n, p.input_state, input);
    Displacement d = displacement(p, pi);
    Config c = ic;
    for (std::size_t q = 0; q < n; ++q) c[q] += d[q];
    if (!c.nonnegative())
        throw Error(ErrorCode::PreconditionFailed, "IC(i) does not potentially reach a configuration via pi");
    const Nat xi = pottier_constant(p);
    Int outside = 0;
    for (std::size_t q = 0; q < n; ++q)
        if (!(q < S.size() && S[q])) outside += c[q];
    if (xi * outside > c.size())
        throw Error(ErrorCode::PreconditionFailed, "configuration is not (1/xi)-concentrated in S");

    // Reduce away the input-state count; valid because the displacement of a
    // solution is non-positive on the input state.
    Nat reduced_input = input - c[x];
    if (reduced_input < 0)
        throw Error(ErrorCode::Internal, "input-state displacement is positive");
    Config reduced = c;
    reduced[x] = 0;

    if (reduced_input == 0) {
        // Degenerate instance: only the trivial empty extraction exists.
        for (std::size_t q = 0; q < n; ++q)
            if (!(q < S.size() && S[q]) && reduced[q] != 0)
                throw Error(ErrorCode::Internal, "no qualifying basis part exists");
        AllEmptyResult r;
        r.input_size = 0;
        r.theta = TransitionMultiset(p.transitions.size());
        r.reached = Config(n);
        return r;
    }

    DiophSystem sys = realisable_system(p);
    HilbertBasis hb = hilbert_basis(sys, limits);
    std::vector<Nat> mult = decompose_solution(pi.mult, sys, hb);
    for (std::size_t i = 0; i < hb.elements.size(); ++i) {
        if (mult[i] == 0) continue;
        TransitionMultiset part;
        part.mult = hb.elements[i];
        Displacement pd = displacement(p, part);
        Nat part_input = -pd[x];
        if (part_input <= 0) continue;
        Config part_result = unit_config(n, p.input_state, part_input);
        for (std::size_t q = 0; q < n; ++q) part_result[q] += pd[q];
        bool clean = true;
        for (std::size_t q = 0; q < n && clean; ++q)
            if (!(q < S.size() && S[q]) && part_result[q] != 0) clean = false;
        if (clean) {
            AllEmptyResult r;
            r.input_size = part_input;
            r.theta = part;
            r.reached = part_result;
            return r;
        }
    }
    throw Error(ErrorCode::Internal,
                "no basis part with positive input avoids the states outside S; "
                "this contradicts the counting argument");
}

}  // namespace pp
