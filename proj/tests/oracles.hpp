#pragma once

// Reference implementations used only by the tests. None of them call into
// the library's arithmetic, so agreement is evidence rather than tautology.

#include "knotlab/knotlab.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using knotlab::Integer;

/// Plain exponent -> coefficient map; zero entries are pruned on request.
using Poly = std::map<long long, Integer>;

inline Poly prune(Poly p) {
    for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
    return p;
}

inline Poly convolve(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
    return prune(r);
}

inline Poly from(const knotlab::LaurentPoly& p) {
    Poly r;
    for (const auto& [e, c] : p.terms()) r[e] = c;
    return r;
}

/// Recursive state sum over all 2^c smoothings. Loops are counted by a
/// depth-first walk over the label graph of each complete state.
inline Poly naive_bracket(const std::vector<knotlab::RawCrossing>& xs) {
    if (xs.empty()) return {{0, 1}};
    std::vector<long long> labels;
    for (const auto& x : xs) labels.insert(labels.end(), x.begin(), x.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto id = [&](long long a) { return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), a) - labels.begin()); };

    Poly total;
    std::vector<int> choice(xs.size(), 0);
    auto leaf = [&] {
        std::vector<std::vector<std::size_t>> adj(labels.size());
        int a_minus_b = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const auto& x = xs[i];
            std::array<std::array<int, 2>, 2> pairs = choice[i] == 0 ? std::array<std::array<int, 2>, 2>{{{0, 1}, {2, 3}}}
                                                                     : std::array<std::array<int, 2>, 2>{{{0, 3}, {1, 2}}};
            a_minus_b += choice[i] == 0 ? 1 : -1;
            for (const auto& pr : pairs) {
                const std::size_t u = id(x[pr[0]]), v = id(x[pr[1]]);
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        }
        std::vector<bool> seen(labels.size(), false);
        int loops = 0;
        for (std::size_t s = 0; s < labels.size(); ++s) {
            if (seen[s]) continue;
            ++loops;
            std::vector<std::size_t> stack{s};
            seen[s] = true;
            while (!stack.empty()) {
                const std::size_t u = stack.back();
                stack.pop_back();
                for (std::size_t v : adj[u])
                    if (!seen[v]) {
                        seen[v] = true;
                        stack.push_back(v);
                    }
            }
        }
        Poly term{{a_minus_b, 1}};
        const Poly delta{{2, -1}, {-2, -1}};
        for (int k = 1; k < loops; ++k) term = convolve(term, delta);
        for (const auto& [e, c] : term) total[e] += c;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == xs.size()) {
            leaf();
            return;
        }
        for (int c : {0, 1}) {
            choice[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    return prune(total);
}

/// Leibniz expansion over all permutations.
inline Integer leibniz_det(const std::vector<std::vector<Integer>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
        Integer prod = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) prod *= m[i][perm[i]];
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline std::vector<std::vector<Integer>> big(const knotlab::IntMatrix& m) {
    std::vector<std::vector<Integer>> r(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
    return r;
}

/// Leibniz expansion with polynomial entries.
inline Poly leibniz_det_poly(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Poly total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
        Poly prod{{0, inversions % 2 ? -1 : 1}};
        for (std::size_t i = 0; i < n; ++i) prod = convolve(prod, m[i][perm[i]]);
        for (const auto& [e, c] : prod) total[e] += c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return prune(total);
}

/// det(M - t M^T), unnormalized.
inline Poly alexander_raw(const knotlab::IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = prune({{0, m(i, j)}, {1, -m(j, i)}});
    return leibniz_det_poly(a);
}

/// Shift to lowest exponent 0 with a positive constant term.
inline Poly normalize(Poly p) {
    p = prune(p);
    if (p.empty()) return p;
    const long long lo = p.begin()->first;
    const bool flip = p.begin()->second < 0;
    Poly r;
    for (const auto& [e, c] : p) r[e - lo] = flip ? Integer(-c) : c;
    return r;
}

/// Signature of M + M^T from its characteristic polynomial: the roots are
/// real, so Descartes' rule counts positive and negative eigenvalues exactly.
inline int signature(const knotlab::IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = prune({{0, m(i, j) + m(j, i)}, {1, i == j ? -1 : 0}});
    const Poly chi = leibniz_det_poly(a);
    auto sign_changes = [](const Poly& p, bool negate_x) {
        int changes = 0, last = 0;
        for (const auto& [e, c] : p) {
            int s = c > 0 ? 1 : -1;
            if (negate_x && e % 2 != 0) s = -s;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    };
    return sign_changes(chi, false) - sign_changes(chi, true);
}

/// Linking numbers of the two core curves through the band crossing region,
/// computed on a four-strand picture: cups (0,1),(2,3), caps the same, one
/// letter on strands 1-2 for the point where the core curves meet the disk
/// (the push-off passing over), then |p| letters for the double crossings.
/// Only crossings where the pushed-off curve is over are counted, so no
/// halving is involved.
inline long long core_linking(long long p, bool pushoff_is_first) {
    struct Letter {
        bool left_over;
    };
    std::vector<Letter> word{{pushoff_is_first}};
    for (long long k = 0; k < (p < 0 ? -p : p); ++k) word.push_back({p < 0});

    // trace both components, recording (letter, over?, dx, dy)
    struct Pass {
        std::size_t level;
        bool over;
        int dx, dy;
        int component;
    };
    std::vector<Pass> passes;
    const std::array<int, 4> partner{1, 0, 3, 2};
    std::array<bool, 4> seen{};
    int comp = 0;
    for (int start : {0, 2}) {
        if (seen[start]) continue;
        int pos = start;
        do {
            seen[pos] = true;
            for (std::size_t k = 0; k < word.size(); ++k) {
                if (pos == 1) {
                    passes.push_back({k, word[k].left_over, 1, 1, comp});
                    pos = 2;
                } else if (pos == 2) {
                    passes.push_back({k, !word[k].left_over, -1, 1, comp});
                    pos = 1;
                }
            }
            pos = partner[pos];
            for (std::size_t k = word.size(); k-- > 0;) {
                if (pos == 1) {
                    passes.push_back({k, !word[k].left_over, 1, -1, comp});
                    pos = 2;
                } else if (pos == 2) {
                    passes.push_back({k, word[k].left_over, -1, -1, comp});
                    pos = 1;
                }
            }
            seen[pos] = true;
            pos = partner[pos];
        } while (pos != start);
        ++comp;
    }
    // component 0 starts at strand 0 (first core curve), component 1 at strand 2
    const int pushoff = pushoff_is_first ? 0 : 1;
    long long lk = 0;
    for (const auto& a : passes) {
        if (a.component != pushoff || !a.over) continue;
        for (const auto& b : passes) {
            if (b.level != a.level || b.component == pushoff) continue;
            lk += a.dx * b.dy - a.dy * b.dx > 0 ? 1 : -1;
        }
    }
    return lk;
}

/// Random genus-one form with entries in [-r, r] and |a12 - a21| = 1.
inline knotlab::IntMatrix random_genus_one(std::mt19937_64& rng, int r) {
    std::uniform_int_distribution<int> d(-r, r);
    while (true) {
        const int a11 = d(rng), a12 = d(rng), a21 = d(rng), a22 = d(rng);
        if (a12 - a21 == 1 || a12 - a21 == -1) return knotlab::IntMatrix{{a11, a12}, {a21, a22}};
    }
}

/// Random unimodular matrix: a product of elementary row operations and swaps.
inline knotlab::IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
    knotlab::IntMatrix t = knotlab::IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> row(0, n - 1);
    std::uniform_int_distribution<int> k(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = row(rng), j = row(rng);
        if (i == j) continue;
        knotlab::IntMatrix e = knotlab::IntMatrix::identity(n);
        e(i, j) = k(rng);
        t = e * t;
    }
    return t;
}

/// Random one-component plat on `strands` strands with `length` letters,
/// standard cups and caps; retries until the closure is a knot.
inline knotlab::PlanarDiagram random_knot(std::mt19937_64& rng, std::size_t strands, std::size_t length) {
    knotlab::PlatLayout layout;
    layout.strands = strands;
    for (std::size_t i = 0; i < strands; i += 2) {
        layout.cups.push_back({i, i + 1});
        layout.caps.push_back({i, i + 1});
    }
    std::uniform_int_distribution<std::size_t> pos(0, strands - 2);
    std::bernoulli_distribution coin(0.5);
    // short words on many strands may never close into one component, so
    // lengthen the word after repeated misses
    for (std::size_t attempt = 0;; ++attempt) {
        if (attempt > 0 && attempt % 64 == 0) ++length;
        layout.word.clear();
        for (std::size_t k = 0; k < length; ++k) layout.word.push_back({pos(rng), coin(rng)});
        if (knotlab::trace_plat(layout).components.size() == 1) return knotlab::plat_diagram(layout);
    }
}

}  // namespace oracle
