#pragma once

#include "knotlab/core.hpp"
#include "knotlab/diagram.hpp"
#include "knotlab/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace knotlab {

enum class BracketMethod {
    /// Crossings are absorbed one at a time while tracking how the open
    /// strands on the boundary are paired up. Cost grows with the width of
    /// that boundary, not with 2^crossings.
    frontier,
    /// Sums all 2^c smoothings directly. Reference method for small diagrams.
    enumerate,
};

struct BracketOptions {
    std::size_t crossing_cap = 32;
    BracketMethod method = BracketMethod::frontier;
    /// 0 picks the hardware concurrency; used by the enumerate method only.
    unsigned threads = 0;
};

/// Union-find over 0..n-1 with path halving and union by size.
class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// False if x and y were already joined.
    bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (size_[x] < size_[y]) std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

/// -A^2 - A^-2, the value of an extra closed loop.
inline LaurentPoly loop_value() { return LaurentPoly::from_terms({{2, -1}, {-2, -1}}); }

namespace detail {

inline void check_cap(const PlanarDiagram& d, const BracketOptions& opt) {
    if (d.crossing_count() > opt.crossing_cap) {
        throw DomainError("diagram has " + std::to_string(d.crossing_count()) + " crossings, above the cap of " +
                          std::to_string(opt.crossing_cap));
    }
}

inline LaurentPoly loop_power(std::size_t k) {
    LaurentPoly r = LaurentPoly::constant(1);
    const LaurentPoly delta = loop_value();
    for (std::size_t i = 0; i < k; ++i) r *= delta;
    return r;
}

/// The A smoothing joins slots (0,1) and (2,3); the B smoothing joins (0,3)
/// and (1,2).
inline std::array<std::pair<int, int>, 2> smoothing_pairs(bool a_smoothing) {
    if (a_smoothing) return {{{0, 1}, {2, 3}}};
    return {{{0, 3}, {1, 2}}};
}

/// Boundary state: sorted (low, high) label pairs, each an open strand
/// whose two ends sit on the frontier, plus whether any loop has closed yet.
struct FrontierKey {
    std::vector<std::pair<ArcId, ArcId>> pairs;
    bool closed = false;

    friend bool operator<(const FrontierKey& x, const FrontierKey& y) {
        if (x.closed != y.closed) return x.closed < y.closed;
        return x.pairs < y.pairs;
    }
};

/// Glues one smoothed crossing onto a boundary state. Returns the new pairing
/// and the number of loops that closed.
inline std::pair<std::vector<std::pair<ArcId, ArcId>>, std::size_t> glue(
    const std::vector<std::pair<ArcId, ArcId>>& pairs, const RawCrossing& x, bool a_smoothing) {
    std::vector<std::pair<ArcId, ArcId>> edges = pairs;
    for (const auto& [s, t] : smoothing_pairs(a_smoothing)) {
        edges.emplace_back(x[static_cast<std::size_t>(s)], x[static_cast<std::size_t>(t)]);
    }

    std::vector<ArcId> nodes;
    for (const auto& [u, v] : edges) {
        nodes.push_back(u);
        nodes.push_back(v);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    auto index = [&](ArcId a) {
        return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), a) - nodes.begin());
    };

    // every node has one or two edge ends; a self-loop contributes both ends
    std::vector<std::vector<std::size_t>> incident(nodes.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        incident[index(edges[e].first)].push_back(e);
        incident[index(edges[e].second)].push_back(e);
    }
    std::vector<bool> used(edges.size(), false);
    auto step = [&](std::size_t node) -> std::ptrdiff_t {
        for (std::size_t e : incident[node]) {
            if (used[e]) continue;
            used[e] = true;
            const std::size_t a = index(edges[e].first);
            const std::size_t b = index(edges[e].second);
            return static_cast<std::ptrdiff_t>(a == node ? b : a);
        }
        return -1;
    };

    std::vector<std::pair<ArcId, ArcId>> out;
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        if (incident[n].size() != 1 || used[incident[n][0]]) continue;
        std::size_t cur = n;
        for (std::ptrdiff_t nx = step(cur); nx >= 0; nx = step(cur)) cur = static_cast<std::size_t>(nx);
        out.emplace_back(std::min(nodes[n], nodes[cur]), std::max(nodes[n], nodes[cur]));
    }
    std::size_t loops = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (used[e]) continue;
        ++loops;
        std::size_t cur = index(edges[e].first);
        for (std::ptrdiff_t nx = step(cur); nx >= 0; nx = step(cur)) cur = static_cast<std::size_t>(nx);
    }
    std::sort(out.begin(), out.end());
    return {std::move(out), loops};
}

/// Greedy order: next is the unprocessed crossing sharing the most arcs with
/// those already absorbed, ties to the lowest index.
inline std::vector<std::size_t> frontier_order(const PlanarDiagram& d) {
    const std::size_t c = d.crossing_count();
    std::vector<std::size_t> order;
    std::vector<bool> done(c, false);
    std::map<ArcId, int> touched;
    for (std::size_t k = 0; k < c; ++k) {
        std::size_t best = c;
        int best_score = -1;
        for (std::size_t i = 0; i < c; ++i) {
            if (done[i]) continue;
            int score = 0;
            for (ArcId a : d.crossings()[i]) score += touched.count(a) ? 1 : 0;
            if (score > best_score) {
                best_score = score;
                best = i;
            }
        }
        done[best] = true;
        order.push_back(best);
        for (ArcId a : d.crossings()[best]) ++touched[a];
    }
    return order;
}

inline LaurentPoly bracket_frontier(const PlanarDiagram& d) {
    const LaurentPoly delta = loop_value();
    std::map<FrontierKey, LaurentPoly> states;
    states[FrontierKey{}] = LaurentPoly::constant(1);
    for (std::size_t i : frontier_order(d)) {
        const RawCrossing& x = d.crossings()[i];
        std::map<FrontierKey, LaurentPoly> next;
        for (const auto& [key, value] : states) {
            for (bool a_smoothing : {true, false}) {
                auto [pairs, loops] = glue(key.pairs, x, a_smoothing);
                LaurentPoly v = value.shifted(a_smoothing ? 1 : -1);
                bool closed = key.closed;
                // the first loop to close is the normalizing one
                if (loops > 0 && !closed) {
                    closed = true;
                    --loops;
                }
                for (std::size_t k = 0; k < loops; ++k) v *= delta;
                next[FrontierKey{std::move(pairs), closed}] += v;
            }
        }
        states.clear();
        for (auto& [key, value] : next) {
            if (!value.is_zero()) states.emplace(key, std::move(value));
        }
    }
    LaurentPoly total;
    for (const auto& [key, value] : states) {
        if (!key.pairs.empty() || !key.closed) throw std::logic_error("frontier did not close");
        total += value;
    }
    return total;
}

inline LaurentPoly bracket_enumerate(const PlanarDiagram& d, unsigned threads) {
    const std::size_t c = d.crossing_count();
    if (c >= 63) throw DomainError("state enumeration needs fewer than 63 crossings");
    const std::vector<ArcId> labels = d.arcs();
    auto slot_index = [&](ArcId a) {
        return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), a) - labels.begin());
    };
    std::vector<std::array<std::size_t, 4>> xs;
    for (const auto& x : d.crossings()) xs.push_back({slot_index(x[0]), slot_index(x[1]), slot_index(x[2]), slot_index(x[3])});

    const std::uint64_t total = std::uint64_t{1} << c;
    // histogram[(a - b) + c][loops]; a state has between 1 and 2c loops
    using Histogram = std::vector<std::vector<std::uint64_t>>;
    auto run = [&](std::uint64_t lo, std::uint64_t hi, Histogram& h) {
        h.assign(2 * c + 1, std::vector<std::uint64_t>(2 * c + 1, 0));
        for (std::uint64_t s = lo; s < hi; ++s) {
            DisjointSet dsu(labels.size());
            std::size_t loops = labels.size();
            std::size_t a_count = 0;
            for (std::size_t i = 0; i < c; ++i) {
                const bool a_smoothing = ((s >> i) & 1u) == 0;
                a_count += a_smoothing ? 1 : 0;
                for (const auto& [p, q] : smoothing_pairs(a_smoothing)) {
                    if (dsu.unite(xs[i][static_cast<std::size_t>(p)], xs[i][static_cast<std::size_t>(q)])) --loops;
                }
            }
            ++h[2 * a_count][loops];
        }
    };

    unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
    workers = std::max(1u, workers);
    if (total < (std::uint64_t{1} << 12)) workers = 1;
    std::vector<Histogram> parts(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = total * w / workers;
        const std::uint64_t hi = total * (w + 1) / workers;
        if (workers == 1) {
            run(lo, hi, parts[w]);
        } else {
            pool.emplace_back(run, lo, hi, std::ref(parts[w]));
        }
    }
    for (auto& th : pool) th.join();

    LaurentPoly result;
    std::vector<LaurentPoly> powers;
    for (std::size_t k = 0; k <= 2 * c; ++k) powers.push_back(k == 0 ? LaurentPoly::constant(1) : powers.back() * loop_value());
    for (std::size_t shift = 0; shift <= 2 * c; ++shift) {
        for (std::size_t loops = 1; loops <= 2 * c; ++loops) {
            std::uint64_t count = 0;
            for (const auto& h : parts) count += h[shift][loops];
            if (count == 0) continue;
            // a_count - b_count = 2 a_count - c
            const auto exponent = static_cast<LaurentPoly::Exponent>(shift) - static_cast<LaurentPoly::Exponent>(c);
            LaurentPoly term = powers[loops - 1].shifted(exponent);
            result += LaurentPoly::constant(Integer(count)) * term;
        }
    }
    return result;
}

}  // namespace detail

/// Kauffman bracket in A, normalized so the crossingless circle is 1.
inline LaurentPoly kauffman_bracket(const PlanarDiagram& d, const BracketOptions& opt = {}) {
    detail::check_cap(d, opt);
    if (d.is_trivial()) return LaurentPoly::constant(1);
    return opt.method == BracketMethod::frontier ? detail::bracket_frontier(d)
                                                 : detail::bracket_enumerate(d, opt.threads);
}

/// Jones polynomial stored in q = t^(1/2): (-A^3)^(-w) <D> with A = q^(-1/2).
/// Knot values only use even powers of q.
inline LaurentPoly jones(const PlanarDiagram& d, const BracketOptions& opt = {}) {
    const LaurentPoly bracket = kauffman_bracket(d, opt);
    const int w = writhe(d);
    LaurentPoly normalized = bracket.shifted(-3 * static_cast<LaurentPoly::Exponent>(w));
    if (w % 2 != 0) normalized = -normalized;
    return normalized.divide_exponents(-2);
}

/// q-form -> t-form; every q exponent must be even.
inline LaurentPoly q_to_t(const LaurentPoly& q_form) { return q_form.divide_exponents(2); }

/// t-form -> q-form.
inline LaurentPoly t_to_q(const LaurentPoly& t_form) { return t_form.scale_exponents(2); }

/// Jones polynomial in t. Throws for diagrams whose value has odd q powers,
/// which cannot happen for a knot.
inline LaurentPoly jones_t(const PlanarDiagram& d, const BracketOptions& opt = {}) { return q_to_t(jones(d, opt)); }

/// Effect of ell full twists on one band of a twisted double, given the
/// current value in q: t^(2 ell) V + 1 - t^(2 ell). It holds whenever the
/// smoothing of a twist crossing leaves a two-component unlink.
inline LaurentPoly jones_twist(const LaurentPoly& v_q, std::int64_t ell) {
    const LaurentPoly shift = LaurentPoly::monomial(1, detail::checked_mul(4, ell));
    return shift * v_q + LaurentPoly::constant(1) - shift;
}

}  // namespace knotlab
