#pragma once

#include "knotlab/core.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotlab {

using ArcId = std::int64_t;

/// One crossing in PD notation: X[a,b,c,d] lists the four incident arcs
/// counterclockwise starting from the incoming under-strand, so the under
/// strand runs a -> c and the over strand joins b and d.
///
/// With the under strand drawn pointing up, b is on the right and d on the
/// left. The crossing is positive when the over strand runs d -> b and
/// negative when it runs b -> d. The right-handed trefoil, all three
/// crossings positive, is
///
///     X[4,2,5,1] X[2,6,3,5] X[6,4,1,3]
using RawCrossing = std::array<ArcId, 4>;

/// Slot position of an arc end on a crossing.
struct ArcEnd {
    std::size_t crossing = 0;
    int slot = 0;

    friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

/// A validated oriented knot diagram.
///
/// Orientation is inferred by tracing from the first crossing's incoming
/// under-strand; every arc then runs from a tail slot (where it leaves a
/// crossing) to a head slot (where it enters one). The diagram with no
/// crossings is the round unknot; its single arc is labeled 1.
class PlanarDiagram {
public:
    PlanarDiagram() = default;

    static PlanarDiagram unknot() { return {}; }
    static PlanarDiagram validate(std::vector<RawCrossing> raw);
    static PlanarDiagram parse(std::string_view text);

    const std::vector<RawCrossing>& crossings() const noexcept { return crossings_; }
    std::size_t crossing_count() const noexcept { return crossings_.size(); }
    bool is_trivial() const noexcept { return crossings_.empty(); }

    /// +1 or -1.
    int sign(std::size_t i) const { return over_in_slot_.at(i) == 3 ? 1 : -1; }

    /// Slot (1 or 3) through which the over strand enters crossing i.
    int over_in_slot(std::size_t i) const { return over_in_slot_.at(i); }

    bool has_arc(ArcId a) const { return is_trivial() ? a == 1 : ends_.count(a) != 0; }

    /// Sorted arc labels.
    std::vector<ArcId> arcs() const {
        if (is_trivial()) return {1};
        std::vector<ArcId> out;
        out.reserve(ends_.size());
        for (const auto& [a, e] : ends_) out.push_back(a);
        return out;
    }

    ArcId max_arc() const { return is_trivial() ? 1 : ends_.rbegin()->first; }

    ArcEnd tail(ArcId a) const { return ends_.at(a).first; }
    ArcEnd head(ArcId a) const { return ends_.at(a).second; }

    /// "X[a,b,c,d] X[...]"; the empty string for the trivial diagram.
    std::string to_string() const {
        std::string out;
        for (const auto& x : crossings_) {
            if (!out.empty()) out += ' ';
            out += "X[" + std::to_string(x[0]) + ',' + std::to_string(x[1]) + ',' + std::to_string(x[2]) + ',' +
                   std::to_string(x[3]) + ']';
        }
        return out;
    }

    friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) { return a.crossings_ == b.crossings_; }

private:
    std::vector<RawCrossing> crossings_;
    std::vector<int> over_in_slot_;
    std::map<ArcId, std::pair<ArcEnd, ArcEnd>> ends_;
};

inline PlanarDiagram PlanarDiagram::validate(std::vector<RawCrossing> raw) {
    PlanarDiagram d;
    if (raw.empty()) return d;

    std::map<ArcId, std::vector<ArcEnd>> occurrences;
    for (std::size_t c = 0; c < raw.size(); ++c) {
        for (int s = 0; s < 4; ++s) {
            const ArcId a = raw[c][static_cast<std::size_t>(s)];
            if (a <= 0) throw DomainError("arc identifiers must be positive, got " + std::to_string(a));
            occurrences[a].push_back({c, s});
        }
    }
    for (const auto& [a, where] : occurrences) {
        if (where.size() != 2) {
            throw DomainError("arc " + std::to_string(a) + " appears " + std::to_string(where.size()) +
                              " times, expected exactly 2");
        }
    }
    auto other_end = [&](ArcId a, ArcEnd here) {
        const auto& w = occurrences.at(a);
        return w[0] == here ? w[1] : w[0];
    };

    // Faces of the embedding are the orbits of "follow the arc, then turn to
    // the next slot"; a connected planar 4-valent diagram has c + 2 of them.
    {
        std::vector<std::array<bool, 4>> seen(raw.size(), {false, false, false, false});
        std::size_t faces = 0;
        for (std::size_t c = 0; c < raw.size(); ++c) {
            for (int s = 0; s < 4; ++s) {
                if (seen[c][static_cast<std::size_t>(s)]) continue;
                ++faces;
                ArcEnd cur{c, s};
                while (!seen[cur.crossing][static_cast<std::size_t>(cur.slot)]) {
                    seen[cur.crossing][static_cast<std::size_t>(cur.slot)] = true;
                    const ArcEnd far = other_end(raw[cur.crossing][static_cast<std::size_t>(cur.slot)], cur);
                    cur = {far.crossing, (far.slot + 1) % 4};
                }
            }
        }
        // the check below only makes sense once we know the diagram is connected,
        // which the single-component trace guarantees; remember the count
        d.crossings_ = raw;
        d.over_in_slot_.assign(raw.size(), 0);
        std::vector<std::array<bool, 4>> visited(raw.size(), {false, false, false, false});
        const ArcEnd start{0, 0};
        ArcEnd enter = start;
        do {
            auto& v = visited[enter.crossing];
            if (v[static_cast<std::size_t>(enter.slot)]) {
                throw DomainError("inconsistent orientation: crossing " + std::to_string(enter.crossing + 1) +
                                  " is traversed twice along the same strand");
            }
            if (enter.slot == 2) {
                throw DomainError("inconsistent orientation at crossing " + std::to_string(enter.crossing + 1) +
                                  ": the under-strand is entered through its outgoing slot");
            }
            const int exit_slot = (enter.slot + 2) % 4;
            v[static_cast<std::size_t>(enter.slot)] = true;
            v[static_cast<std::size_t>(exit_slot)] = true;
            if (enter.slot != 0) d.over_in_slot_[enter.crossing] = enter.slot;
            const ArcEnd out{enter.crossing, exit_slot};
            const ArcId a = raw[enter.crossing][static_cast<std::size_t>(exit_slot)];
            const ArcEnd next = other_end(a, out);
            d.ends_[a] = {out, next};
            enter = next;
        } while (!(enter == start));

        for (const auto& v : visited) {
            if (!(v[0] && v[1] && v[2] && v[3])) throw DomainError("multiple components: not a knot diagram");
        }
        if (faces != raw.size() + 2) {
            throw DomainError("non-planar PD code: " + std::to_string(faces) + " faces, expected " +
                              std::to_string(raw.size() + 2));
        }
    }
    return d;
}

namespace detail {

/// Reads "X[1,5,2,4] X[3,1,4,6] ..." with whitespace or commas between
/// tokens, optionally wrapped in "PD[...]", or a nested list
/// "[[1,5,2,4],[3,1,4,6],...]".
inline std::vector<RawCrossing> parse_pd_code(std::string_view text) {
    std::vector<RawCrossing> out;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw DomainError("PD parse error at offset " + std::to_string(pos) + ": " + what);
    };
    auto skip = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
    };

    skip();
    int wrappers = 0;
    if (text.substr(pos).starts_with("PD")) {
        pos += 2;
        skip();
        if (pos >= text.size() || text[pos] != '[') fail("expected '[' after PD");
        ++pos;
        wrappers = 1;
    } else {
        std::size_t probe = pos;
        if (probe < text.size() && text[probe] == '[') {
            ++probe;
            while (probe < text.size() && std::isspace(static_cast<unsigned char>(text[probe]))) ++probe;
            if (probe < text.size() && (text[probe] == '[' || text[probe] == ']')) {
                pos = probe;
                wrappers = 1;
            }
        }
    }

    while (true) {
        skip();
        if (pos >= text.size()) break;
        if (text[pos] == ']') {
            if (wrappers == 0) fail("unbalanced ']'");
            --wrappers;
            ++pos;
            continue;
        }
        if (text[pos] == 'X') {
            ++pos;
            skip();
        }
        if (pos >= text.size() || text[pos] != '[') fail("expected 'X[' or '['");
        ++pos;
        RawCrossing x{};
        for (std::size_t k = 0; k < 4; ++k) {
            skip();
            const std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) fail("expected a positive arc identifier");
            x[k] = to_int64(Integer(std::string(text.substr(start, pos - start))));
        }
        skip();
        if (pos >= text.size() || text[pos] != ']') fail("a crossing needs exactly four arcs");
        ++pos;
        out.push_back(x);
    }
    if (wrappers != 0) fail("unbalanced '['");
    return out;
}

}  // namespace detail

inline PlanarDiagram PlanarDiagram::parse(std::string_view text) { return validate(detail::parse_pd_code(text)); }

inline PlanarDiagram validate_pd(std::vector<RawCrossing> raw) { return PlanarDiagram::validate(std::move(raw)); }

inline int writhe(const PlanarDiagram& d) {
    int w = 0;
    for (std::size_t i = 0; i < d.crossing_count(); ++i) w += d.sign(i);
    return w;
}

/// Swaps over and under at every crossing, rotating each tuple so that it
/// again starts at the incoming under-strand.
inline PlanarDiagram mirror(const PlanarDiagram& d) {
    std::vector<RawCrossing> raw;
    raw.reserve(d.crossing_count());
    for (std::size_t i = 0; i < d.crossing_count(); ++i) {
        const auto& [a, b, c, e] = d.crossings()[i];
        raw.push_back(d.sign(i) > 0 ? RawCrossing{e, a, b, c} : RawCrossing{b, c, e, a});
    }
    return PlanarDiagram::validate(std::move(raw));
}

/// Inserts a Reidemeister-I curl of the given sign on `arc`. The curl's
/// crossing is appended; the arc keeps its label up to the curl and two
/// fresh labels cover the loop and the remainder.
inline PlanarDiagram add_kink(const PlanarDiagram& d, ArcId arc, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("kink sign must be +1 or -1");
    if (!d.has_arc(arc)) throw DomainError("unknown arc " + std::to_string(arc));
    std::vector<RawCrossing> raw = d.crossings();
    const ArcId loop = d.max_arc() + 1;
    ArcId rest = d.max_arc() + 2;
    if (d.is_trivial()) {
        rest = arc;
    } else {
        const ArcEnd h = d.head(arc);
        raw[h.crossing][static_cast<std::size_t>(h.slot)] = rest;
    }
    // under first; the loop returns on the over strand through slot 3 (positive) or slot 1 (negative)
    raw.push_back(sign > 0 ? RawCrossing{arc, rest, loop, loop} : RawCrossing{arc, loop, loop, rest});
    return PlanarDiagram::validate(std::move(raw));
}

/// Connected sum: cuts arc1 of d1 and arc2 of d2 and cross-joins the ends so
/// the orientations agree. Arcs of d2 are relabeled past d1's labels.
inline PlanarDiagram connect_sum_diagram(const PlanarDiagram& d1, ArcId arc1, const PlanarDiagram& d2, ArcId arc2) {
    if (!d1.has_arc(arc1)) throw DomainError("unknown arc " + std::to_string(arc1) + " in first diagram");
    if (!d2.has_arc(arc2)) throw DomainError("unknown arc " + std::to_string(arc2) + " in second diagram");
    if (d1.is_trivial()) return d2;
    if (d2.is_trivial()) return d1;

    const ArcId offset = d1.max_arc();
    std::vector<RawCrossing> raw = d1.crossings();
    for (auto x : d2.crossings()) {
        for (auto& a : x) a += offset;
        raw.push_back(x);
    }
    const std::size_t shift = d1.crossing_count();
    const ArcEnd h1 = d1.head(arc1);
    ArcEnd h2 = d2.head(arc2);
    h2.crossing += shift;
    // arc1 now runs from d1's tail into d2's head; arc2 + offset from d2's tail into d1's head
    raw[h1.crossing][static_cast<std::size_t>(h1.slot)] = arc2 + offset;
    raw[h2.crossing][static_cast<std::size_t>(h2.slot)] = arc1;
    try {
        return PlanarDiagram::validate(std::move(raw));
    } catch (const DomainError& e) {
        throw DomainError(std::string("orientation mismatch at splice: ") + e.what());
    }
}

}  // namespace knotlab
