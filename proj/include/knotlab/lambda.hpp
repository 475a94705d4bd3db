#pragma once

#include "knotlab/bracket.hpp"
#include "knotlab/core.hpp"
#include "knotlab/diagram.hpp"
#include "knotlab/plat.hpp"
#include "knotlab/seifert.hpp"
#include "knotlab/sequiv.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>

namespace knotlab {

/// Boundary knot of a disk with two bands: n half-twists in the first band,
/// m in the second, and p signed double crossings where the bands pass
/// through each other.
struct LambdaSpec {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t p = 3;

    /// Throws unless n and m are even and p is odd with |p| >= 3.
    static LambdaSpec make(std::int64_t n, std::int64_t m, std::int64_t p) {
        if (n % 2 != 0 || m % 2 != 0) throw DomainError("n and m must be even");
        if (p % 2 == 0 || (p > -3 && p < 3)) throw DomainError("p must be odd with |p| >= 3");
        return LambdaSpec{n, m, p};
    }

    /// Crossings of the compiled diagram: one per half-twist, four per
    /// double crossing.
    std::int64_t crossing_count() const {
        auto mag = [](std::int64_t v) { return v < 0 ? detail::checked_neg(v) : v; };
        return detail::checked_add(detail::checked_add(mag(n), mag(m)), detail::checked_mul(4, mag(p)));
    }

    std::string to_string() const {
        return "lambda(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(p) + ")";
    }

    friend bool operator==(const LambdaSpec&, const LambdaSpec&) = default;
};

/// [[-n/2, (p+1)/2], [(p-1)/2, -m/2]], with α1 and α2 oriented
/// counterclockwise and the positive normal toward the viewer. The same
/// formula covers p < 0, where it equals -M(-n,-m,-p)^T.
inline SeifertMatrix lambda_seifert(const LambdaSpec& s) {
    const LambdaSpec v = LambdaSpec::make(s.n, s.m, s.p);
    return SeifertMatrix::validate(IntMatrix{{-v.n / 2, (v.p + 1) / 2}, {(v.p - 1) / 2, -v.m / 2}});
}

/// Plat layout for p > 0 on eight strands. The first band's boundary
/// occupies positions 1-2 at the bottom and 0-3 at the top, the second band
/// 5-6 and 4-7. Band twists come first, then |p| passes of the first band
/// under the second, four crossings each.
inline PlatLayout lambda_layout(const LambdaSpec& s) {
    const LambdaSpec v = LambdaSpec::make(s.n, s.m, s.p);
    if (v.p < 0) throw DomainError("lambda_layout covers p > 0; negative p is the mirror image");
    PlatLayout layout;
    layout.strands = 8;
    layout.cups = {{1, 2}, {3, 4}, {5, 6}, {0, 7}};
    layout.caps = {{1, 2}, {0, 3}, {5, 6}, {4, 7}};
    for (std::int64_t k = 0; k < std::abs(v.n); ++k) layout.word.push_back({0, v.n < 0});
    for (std::int64_t k = 0; k < std::abs(v.m); ++k) layout.word.push_back({6, v.m < 0});
    for (std::int64_t k = 0; k < v.p; ++k) {
        for (std::size_t g : {3, 2, 4, 3}) layout.word.push_back({g, false});
    }
    return layout;
}

/// Oriented PD diagram of the spec's knot; p < 0 compiles the mirror of
/// λ(-n,-m,-p).
inline PlanarDiagram lambda_diagram(const LambdaSpec& s, std::size_t crossing_cap = 32) {
    const LambdaSpec v = LambdaSpec::make(s.n, s.m, s.p);
    const std::int64_t c = v.crossing_count();
    if (c > static_cast<std::int64_t>(crossing_cap)) {
        throw DomainError(v.to_string() + " compiles to " + std::to_string(c) + " crossings, above the cap of " +
                          std::to_string(crossing_cap));
    }
    if (v.p < 0) return mirror(plat_diagram(lambda_layout(LambdaSpec{-v.n, -v.m, -v.p})));
    return plat_diagram(lambda_layout(v));
}

/// ell full twists on a band add 2·ell half-twists to it.
inline LambdaSpec lambda_twist(const LambdaSpec& s, std::int64_t ell, Band band) {
    const std::int64_t half = detail::checked_mul(2, ell);
    if (band == Band::first) return LambdaSpec::make(detail::checked_add(s.n, half), s.m, s.p);
    return LambdaSpec::make(s.n, detail::checked_add(s.m, half), s.p);
}

}  // namespace knotlab
