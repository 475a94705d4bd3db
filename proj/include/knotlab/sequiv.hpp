#pragma once

#include "knotlab/core.hpp"
#include "knotlab/matrix.hpp"
#include "knotlab/seifert.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace knotlab {

/// Which band of the disk-with-two-bands surface receives the twists. The
/// first band carries α1 and the (1,1) entry of the form.
enum class Band { first, second };

inline const char* to_string(Band b) { return b == Band::first ? "first" : "second"; }

/// ell signed full twists (2·ell crossings) inserted in one band.
struct TwistParams {
    std::int64_t ell = 0;
    Band band = Band::first;
};

/// Form of the twisted knot: the band's diagonal entry drops by ell.
inline SeifertMatrix twist_form(const SeifertMatrix& s, const TwistParams& p) {
    s.genus_one_entries();  // genus check
    IntMatrix m = s.matrix();
    const std::size_t k = p.band == Band::first ? 0 : 1;
    m(k, k) = detail::checked_add(m(k, k), detail::checked_neg(p.ell));
    return SeifertMatrix::validate(std::move(m));
}

namespace detail {

/// Diagonal entry that must vanish for the twist on `band` to be a pure
/// change of basis: a22 for the first band, a11 for the second.
inline IntMatrix::Entry opposite_diagonal(const GenusOneEntries& e, Band band) {
    return band == Band::first ? e.a22 : e.a11;
}

inline const char* opposite_diagonal_name(Band band) { return band == Band::first ? "a22" : "a11"; }

inline bool divides(std::int64_t d, std::int64_t n) {
    // d is a Seifert sum a12 + a21, never 0 on a valid form
    const std::int64_t m = d < 0 ? checked_neg(d) : d;
    return n % m == 0;
}

}  // namespace detail

/// True iff the twisted knot is first S-equivalent (related by Λ1 alone):
/// ell = 0, or the opposite diagonal entry is 0 and s = a12 + a21 divides ell.
inline bool first_sequiv_condition(const SeifertMatrix& s, const TwistParams& p) {
    const GenusOneEntries e = s.genus_one_entries();
    if (p.ell == 0) return true;
    return detail::opposite_diagonal(e, p.band) == 0 && detail::divides(e.s(), p.ell);
}

enum class Decision { first_s_equivalent, not_first_s_equivalent };

inline const char* to_string(Decision d) {
    return d == Decision::first_s_equivalent ? "first_s_equivalent" : "not_first_s_equivalent";
}

/// Outcome of the first-S-equivalence decision. A positive decision carries a
/// certificate and implies S-equivalence; a negative one rules out every
/// unimodular congruence but says nothing about longer Λ2/Λ3 chains.
struct SEquivReport {
    Decision decision = Decision::not_first_s_equivalent;
    std::optional<CongruenceCertificate> certificate;
    std::string reason;
    SeifertMatrix original;
    SeifertMatrix twisted;

    bool implies_s_equivalent() const { return decision == Decision::first_s_equivalent; }
};

/// T M T^T == M' with det T = ±1, checked in exact integer arithmetic.
inline bool verify_certificate(const SeifertMatrix& m, const SeifertMatrix& mp, const CongruenceCertificate& t) {
    if (m.size() != mp.size() || m.size() != t.size()) {
        throw DomainError("verify_certificate: size mismatch");
    }
    const Integer d = determinant(t.matrix());
    if (d != 1 && d != -1) return false;
    return t.matrix() * m.matrix() * t.matrix().transpose() == mp.matrix();
}

inline SEquivReport first_sequiv_certificate(const SeifertMatrix& s, const TwistParams& p) {
    const GenusOneEntries e = s.genus_one_entries();
    SEquivReport report;
    report.original = s;
    report.twisted = twist_form(s, p);

    if (p.ell == 0) {
        report.decision = Decision::first_s_equivalent;
        report.certificate = CongruenceCertificate::identity(2);
        report.reason = "l = 0: the twist is the identity";
        return report;
    }

    const auto opposite = detail::opposite_diagonal(e, p.band);
    const char* name = detail::opposite_diagonal_name(p.band);
    const auto sum = e.s();
    if (opposite != 0) {
        report.reason = std::string(name) + " ≠ 0";
        return report;
    }
    if (!detail::divides(sum, p.ell)) {
        report.reason = "s = " + std::to_string(sum) + " does not divide l = " + std::to_string(p.ell);
        return report;
    }

    const std::int64_t k = -(p.ell / sum);
    IntMatrix t = IntMatrix::identity(2);
    if (p.band == Band::first) {
        t(0, 1) = k;
    } else {
        t(1, 0) = k;
    }
    report.decision = Decision::first_s_equivalent;
    report.certificate = CongruenceCertificate::make(std::move(t));
    report.reason = std::string(name) + " = 0 and s = " + std::to_string(sum) + " divides l = " +
                    std::to_string(p.ell);
    if (!verify_certificate(report.original, report.twisted, *report.certificate)) {
        throw std::logic_error("constructed certificate failed verification");
    }
    return report;
}

/// Exhaustive search over integer T with entries in [-bound, bound] and
/// det T = ±1, returning the lexicographically first (row-major) T with
/// T M T^T = M'. Forms larger than 4x4 are rejected. The search is split
/// across threads by the value of the first entry; the result does not
/// depend on scheduling.
inline std::optional<CongruenceCertificate> brute_force_congruence(const SeifertMatrix& m, const SeifertMatrix& mp,
                                                                   std::int64_t bound) {
    if (m.size() != mp.size()) throw DomainError("brute_force_congruence: size mismatch");
    if (m.size() > 4) throw DomainError("brute_force_congruence: forms above 4x4 are not searched");
    if (bound < 1) throw DomainError("brute_force_congruence: bound must be at least 1");
    const std::size_t n = m.size();
    if (n == 0) {
        return m == mp ? std::optional(CongruenceCertificate::identity(0)) : std::nullopt;
    }
    if (bound > (std::int64_t{1} << 20)) throw DomainError("brute_force_congruence: bound too large");
    const std::size_t cells = n * n;
    const std::int64_t width = 2 * bound + 1;
    using Wide = __int128;
    using Cells = std::array<std::int64_t, 16>;

    // |entries| <= 2^20 keeps every intermediate below 2^110
    auto det = [n](const Cells& t) -> Wide {
        auto at = [&](std::size_t i, std::size_t j) { return Wide(t[i * n + j]); };
        switch (n) {
            case 1:
                return at(0, 0);
            case 2:
                return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
            default: {
                // Laplace expansion along the first row over the remaining minors
                Wide total = 0;
                std::array<std::size_t, 4> cols{};
                for (std::size_t skip = 0; skip < n; ++skip) {
                    std::size_t k = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        if (j != skip) cols[k++] = j;
                    Wide minor = 0;
                    if (n == 3) {
                        minor = at(1, cols[0]) * at(2, cols[1]) - at(1, cols[1]) * at(2, cols[0]);
                    } else {
                        for (std::size_t s2 = 0; s2 < 3; ++s2) {
                            std::array<std::size_t, 2> c2{};
                            std::size_t q = 0;
                            for (std::size_t j = 0; j < 3; ++j)
                                if (j != s2) c2[q++] = cols[j];
                            const Wide m2 = at(2, c2[0]) * at(3, c2[1]) - at(2, c2[1]) * at(3, c2[0]);
                            minor += (s2 % 2 == 0 ? 1 : -1) * at(1, cols[s2]) * m2;
                        }
                    }
                    total += (skip % 2 == 0 ? 1 : -1) * at(0, skip) * minor;
                }
                return total;
            }
        }
    };

    auto matches = [&](const Cells& t) {
        const Wide d = det(t);
        if (d != 1 && d != -1) return false;
        std::array<Wide, 16> tm{};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) tm[i * n + j] += Wide(t[i * n + k]) * Wide(m(k, j));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Wide v = 0;
                for (std::size_t k = 0; k < n; ++k) v += tm[i * n + k] * Wide(t[j * n + k]);
                if (v != Wide(mp(i, j))) return false;
            }
        }
        return true;
    };

    // one slot per value of the leading entry; the smallest filled slot wins
    std::vector<std::optional<Cells>> found(static_cast<std::size_t>(width));
    std::atomic<std::int64_t> best_slot{width};

    auto search_slot = [&](std::int64_t slot) {
        Cells t{};
        t.fill(-bound);
        t[0] = slot - bound;
        while (true) {
            if (best_slot.load(std::memory_order_relaxed) < slot) return;
            if (matches(t)) {
                found[static_cast<std::size_t>(slot)] = t;
                std::int64_t cur = best_slot.load();
                while (slot < cur && !best_slot.compare_exchange_weak(cur, slot)) {
                }
                return;
            }
            // odometer over cells 1..end, last cell fastest
            std::size_t c = cells;
            bool advanced = false;
            while (c > 1) {
                --c;
                if (t[c] < bound) {
                    ++t[c];
                    advanced = true;
                    break;
                }
                t[c] = -bound;
            }
            if (!advanced) return;
        }
    };

    // small spaces are not worth a thread pool
    double space = 1;
    for (std::size_t c = 0; c < cells; ++c) space *= static_cast<double>(width);
    const unsigned workers =
        space < 1e6 ? 1u
                    : std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(width)));
    std::atomic<std::int64_t> next_slot{0};
    auto drain = [&] {
        for (std::int64_t slot = next_slot++; slot < width; slot = next_slot++) search_slot(slot);
    };
    if (workers == 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(drain);
        for (auto& th : pool) th.join();
    }

    for (const auto& hit : found) {
        if (!hit) continue;
        IntMatrix t(n, n);
        for (std::size_t c = 0; c < cells; ++c) t(c / n, c % n) = (*hit)[c];
        return CongruenceCertificate::make(std::move(t));
    }
    return std::nullopt;
}

/// T1 ⊕ I(size2): lifts a certificate on the first summand of a connected sum.
inline CongruenceCertificate connect_sum_certificate(const CongruenceCertificate& t1, std::size_t size2) {
    if (size2 % 2 != 0) throw DomainError("connect_sum_certificate: second summand size must be even");
    return CongruenceCertificate::make(block_diagonal(t1.matrix(), IntMatrix::identity(size2)));
}

}  // namespace knotlab
