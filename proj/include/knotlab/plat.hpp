#pragma once

#include "knotlab/core.hpp"
#include "knotlab/diagram.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace knotlab {

/// Crossing between the strands at positions `position` and `position + 1`.
/// `left_over` means the strand entering from the lower left passes over.
struct BraidLetter {
    std::size_t position = 0;
    bool left_over = false;
};

/// A closed braid-like picture: strands rise from `cups` at the bottom,
/// cross according to `word` read bottom to top, and end in `caps`. Cups and
/// caps are non-crossing perfect matchings of the strand positions.
struct PlatLayout {
    std::size_t strands = 0;
    std::vector<std::pair<std::size_t, std::size_t>> cups;
    std::vector<std::pair<std::size_t, std::size_t>> caps;
    std::vector<BraidLetter> word;
};

/// One passage of a component through a crossing. (dx, dy) is the direction
/// of travel with x to the right and y up.
struct PlatPass {
    std::size_t crossing = 0;
    bool over = false;
    int dx = 0;
    int dy = 0;
};

struct PlatTrace {
    /// Passes of each component in traversal order.
    std::vector<std::vector<PlatPass>> components;
};

namespace detail {

inline std::vector<std::size_t> matching_partner(const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                                                 std::size_t strands, const char* what) {
    std::vector<std::optional<std::size_t>> partner(strands);
    for (auto [a, b] : arcs) {
        if (a >= strands || b >= strands || a == b || partner[a] || partner[b]) {
            throw DomainError(std::string("plat ") + what + " do not form a perfect matching");
        }
        partner[a] = b;
        partner[b] = a;
    }
    for (auto [a, b] : arcs) {
        const auto lo1 = std::min(a, b), hi1 = std::max(a, b);
        for (auto [c, d] : arcs) {
            const auto lo2 = std::min(c, d), hi2 = std::max(c, d);
            if (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) throw DomainError(std::string("plat ") + what + " cross each other");
        }
    }
    std::vector<std::size_t> out(strands);
    for (std::size_t i = 0; i < strands; ++i) {
        if (!partner[i]) throw DomainError(std::string("plat ") + what + " do not form a perfect matching");
        out[i] = *partner[i];
    }
    return out;
}

}  // namespace detail

/// Follows every component through the layout.
inline PlatTrace trace_plat(const PlatLayout& layout) {
    const std::size_t n = layout.strands;
    if (n == 0 || n % 2 != 0) throw DomainError("a plat needs a positive even number of strands");
    for (const auto& l : layout.word) {
        if (l.position + 1 >= n) throw DomainError("braid letter out of range");
    }
    const auto cup = detail::matching_partner(layout.cups, n, "cups");
    const auto cap = detail::matching_partner(layout.caps, n, "caps");
    const std::size_t levels = layout.word.size();

    // each strand position at the bottom is the start of an upward run
    std::vector<bool> bottom_seen(n, false);
    PlatTrace trace;
    for (std::size_t start = 0; start < n; ++start) {
        if (bottom_seen[start]) continue;
        std::vector<PlatPass> passes;
        std::size_t pos = start;
        bool up = true;
        while (true) {
            if (up) {
                bottom_seen[pos] = true;
                for (std::size_t k = 0; k < levels; ++k) {
                    const BraidLetter& l = layout.word[k];
                    if (pos == l.position) {
                        passes.push_back({k, l.left_over, 1, 1});
                        pos = l.position + 1;
                    } else if (pos == l.position + 1) {
                        passes.push_back({k, !l.left_over, -1, 1});
                        pos = l.position;
                    }
                }
                pos = cap[pos];
                up = false;
            } else {
                for (std::size_t k = levels; k-- > 0;) {
                    const BraidLetter& l = layout.word[k];
                    // from above, the strand on the left came up from the lower right
                    if (pos == l.position) {
                        passes.push_back({k, !l.left_over, 1, -1});
                        pos = l.position + 1;
                    } else if (pos == l.position + 1) {
                        passes.push_back({k, l.left_over, -1, -1});
                        pos = l.position;
                    }
                }
                bottom_seen[pos] = true;
                pos = cup[pos];
                up = true;
                if (pos == start) break;
            }
        }
        trace.components.push_back(std::move(passes));
    }
    return trace;
}

/// Sign of a crossing from the travel directions of its two strands: +1 when
/// the under strand points to the left of the over strand.
inline int pass_sign(const PlatPass& over, const PlatPass& under) {
    const int cross = over.dx * under.dy - over.dy * under.dx;
    return cross > 0 ? 1 : -1;
}

/// Signed crossings between components i and j, halved.
inline std::int64_t plat_linking_number(const PlatTrace& t, std::size_t i, std::size_t j) {
    if (i == j || i >= t.components.size() || j >= t.components.size()) {
        throw DomainError("linking number needs two distinct components");
    }
    std::int64_t total = 0;
    for (const auto& p : t.components[i]) {
        for (const auto& q : t.components[j]) {
            if (p.crossing != q.crossing) continue;
            total += p.over ? pass_sign(p, q) : pass_sign(q, p);
        }
    }
    if (total % 2 != 0) throw std::logic_error("odd crossing sum between closed components");
    return total / 2;
}

/// PD code of a one-component plat, arcs numbered 1, 2, ... along the
/// traversal. The signs recovered by validation match the plat geometry.
inline PlanarDiagram plat_diagram(const PlatLayout& layout) {
    const PlatTrace t = trace_plat(layout);
    if (t.components.size() != 1) {
        throw DomainError("plat closes up into " + std::to_string(t.components.size()) + " components");
    }
    const auto& passes = t.components.front();
    if (passes.empty()) return PlanarDiagram::unknot();
    const std::size_t len = passes.size();

    // per crossing: the under pass's arcs and the over pass's arcs and direction
    struct Slots {
        std::optional<std::pair<ArcId, ArcId>> under, over;
        PlatPass under_pass{}, over_pass{};
    };
    std::vector<Slots> slots(layout.word.size());
    for (std::size_t j = 0; j < len; ++j) {
        const ArcId in = static_cast<ArcId>(j == 0 ? len : j);
        const ArcId out = static_cast<ArcId>(j + 1);
        Slots& s = slots[passes[j].crossing];
        if (passes[j].over) {
            s.over = {in, out};
            s.over_pass = passes[j];
        } else {
            s.under = {in, out};
            s.under_pass = passes[j];
        }
    }
    std::vector<RawCrossing> raw;
    std::vector<int> signs;
    for (const auto& s : slots) {
        if (!s.under || !s.over) throw std::logic_error("crossing not visited twice");
        const int sign = pass_sign(s.over_pass, s.under_pass);
        const auto [ui, uo] = *s.under;
        const auto [oi, oo] = *s.over;
        // positive: over strand enters at slot 3 and leaves at slot 1
        raw.push_back(sign > 0 ? RawCrossing{ui, oo, uo, oi} : RawCrossing{ui, oi, uo, oo});
        signs.push_back(sign);
    }
    PlanarDiagram d = PlanarDiagram::validate(std::move(raw));
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (d.sign(i) != signs[i]) throw std::logic_error("plat crossing sign disagrees with its PD code");
    }
    return d;
}

}  // namespace knotlab
