#pragma once

#include "knotlab/core.hpp"
#include "knotlab/laurent.hpp"
#include "knotlab/matrix.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace knotlab {

/// Entries of a genus-one Seifert form, named by position.
struct GenusOneEntries {
    IntMatrix::Entry a11, a12, a21, a22;

    /// a12 + a21; odd, hence nonzero, for any valid form.
    IntMatrix::Entry s() const { return detail::checked_add(a12, a21); }
};

/// A square integer matrix of even size whose skew-symmetrization
/// M - M^T has determinant 1. The 0x0 matrix is the unknot's form.
class SeifertMatrix {
public:
    /// Unknot form.
    SeifertMatrix() = default;

    static SeifertMatrix validate(IntMatrix m) {
        if (!m.is_square()) throw DomainError("Seifert matrix must be square");
        if (m.rows() % 2 != 0) {
            throw DomainError("Seifert matrix must have even size, got " + std::to_string(m.rows()));
        }
        const Integer d = determinant(m - m.transpose());
        if (d != 1) throw DomainError("det(M - M^T) = " + d.str() + ", expected 1");
        SeifertMatrix s;
        s.m_ = std::move(m);
        return s;
    }

    static SeifertMatrix parse(std::string_view text) { return validate(IntMatrix::parse(text)); }

    const IntMatrix& matrix() const noexcept { return m_; }
    std::size_t size() const noexcept { return m_.rows(); }
    std::size_t genus() const noexcept { return m_.rows() / 2; }
    IntMatrix::Entry operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    GenusOneEntries genus_one_entries() const {
        if (genus() != 1) throw DomainError("expected a genus-one form, got genus " + std::to_string(genus()));
        return {m_(0, 0), m_(0, 1), m_(1, 0), m_(1, 1)};
    }

    std::string to_string() const { return m_.to_string(); }

    friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

private:
    IntMatrix m_;
};

/// A unimodular integer matrix T, the witness for T M T^T = M'.
class CongruenceCertificate {
public:
    static CongruenceCertificate make(IntMatrix t) {
        if (!t.is_square()) throw DomainError("certificate must be square");
        const Integer d = determinant(t);
        if (d != 1 && d != -1) throw DomainError("certificate is not unimodular: det = " + d.str());
        CongruenceCertificate c;
        c.t_ = std::move(t);
        return c;
    }

    static CongruenceCertificate identity(std::size_t n) { return make(IntMatrix::identity(n)); }

    const IntMatrix& matrix() const noexcept { return t_; }
    std::size_t size() const noexcept { return t_.rows(); }
    std::string to_string() const { return t_.to_string(); }

    friend bool operator==(const CongruenceCertificate&, const CongruenceCertificate&) = default;

private:
    IntMatrix t_;
};

namespace detail {

/// Lagrange interpolation through (x_i, y_i), exact over the rationals.
/// Every coefficient of the result must be an integer.
inline LaurentPoly interpolate_integer_poly(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> coeffs(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j), ascending coefficients
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * Rational(xs[j]);
            }
            basis = std::move(next);
            denom *= Rational(xs[i] - xs[j]);
        }
        for (std::size_t k = 0; k < n; ++k) coeffs[k] += basis[k] * Rational(ys[i]) / denom;
    }
    LaurentPoly p;
    for (std::size_t k = 0; k < n; ++k) {
        if (denominator(coeffs[k]) != 1) throw std::logic_error("interpolated polynomial is not integral");
        p.add_term(static_cast<LaurentPoly::Exponent>(k), numerator(coeffs[k]));
    }
    return p;
}

}  // namespace detail

/// det(M - t M^T) as a polynomial in t, before unit normalization.
inline LaurentPoly alexander_determinant(const SeifertMatrix& s) {
    const IntMatrix& m = s.matrix();
    const std::size_t n = m.rows();
    const IntMatrix mt = m.transpose();
    // degree <= n, so n + 1 sample points determine it
    std::vector<Integer> xs, ys;
    for (std::size_t k = 0; k <= n; ++k) {
        const auto x = static_cast<std::int64_t>(k);
        xs.emplace_back(x);
        BigMatrix sample(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sample[i][j] = Integer(m(i, j)) - Integer(x) * mt(i, j);
        ys.push_back(determinant(std::move(sample)));
    }
    return detail::interpolate_integer_poly(xs, ys);
}

/// Alexander polynomial normalized up to units ±t^k; 1 for the unknot form.
inline LaurentPoly alexander(const SeifertMatrix& s) { return normalize_units(alexander_determinant(s)); }

/// Signature of M + M^T by exact congruence diagonalization over Q.
inline int signature(const SeifertMatrix& s) {
    const IntMatrix& m = s.matrix();
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(Integer(m(i, j)) + Integer(m(j, i)));

    std::vector<bool> done(n, false);
    int sig = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n && pivot == n; ++i)
            if (!done[i] && a[i][i] != 0) pivot = i;
        if (pivot == n) {
            // all remaining diagonal entries vanish: e_i += e_j makes one nonzero
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (!done[j] && j != i && a[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
                }
            }
            if (pi == n) break;  // remaining block is zero
            for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
            for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
            pivot = pi;
        }
        const Rational p = a[pivot][pivot];
        sig += p > 0 ? 1 : -1;
        done[pivot] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a[i][pivot] == 0) continue;
            const Rational factor = a[i][pivot] / p;
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= factor * a[pivot][j];
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (done[j]) continue;
            a[pivot][j] = 0;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!done[i]) a[i][pivot] = 0;
        }
    }
    return sig;
}

/// Knot determinant |Δ(-1)|.
inline Integer determinant_invariant(const SeifertMatrix& s) {
    const Rational v = evaluate(alexander(s), Integer(-1));
    const Integer n = numerator(v);
    return n < 0 ? Integer(-n) : n;
}

/// Λ1: M -> T M T^T.
inline SeifertMatrix apply_lambda1(const SeifertMatrix& s, const CongruenceCertificate& t) {
    if (s.size() != t.size()) throw DomainError("certificate size does not match the form");
    return SeifertMatrix::validate(t.matrix() * s.matrix() * t.matrix().transpose());
}

namespace detail {

inline IntMatrix embed(const IntMatrix& m, std::size_t extra) {
    IntMatrix r(m.rows() + extra, m.cols() + extra);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

inline void require_length(const SeifertMatrix& s, std::span<const IntMatrix::Entry> q) {
    if (q.size() != s.size()) {
        throw DomainError("enlargement vector has length " + std::to_string(q.size()) + ", expected " +
                          std::to_string(s.size()));
    }
}

}  // namespace detail

/// Λ2 enlargement:
///
///     [ M  0 0 ]
///     [ 0  0 1 ]
///     [ q  0 0 ]
inline SeifertMatrix enlarge_lambda2(const SeifertMatrix& s, std::span<const IntMatrix::Entry> q) {
    detail::require_length(s, q);
    const std::size_t n = s.size();
    IntMatrix r = detail::embed(s.matrix(), 2);
    r(n, n + 1) = 1;
    for (std::size_t j = 0; j < n; ++j) r(n + 1, j) = q[j];
    return SeifertMatrix::validate(std::move(r));
}

/// Λ3 enlargement:
///
///     [ M  0 q ]
///     [ 0  0 0 ]
///     [ 0  1 0 ]
inline SeifertMatrix enlarge_lambda3(const SeifertMatrix& s, std::span<const IntMatrix::Entry> q) {
    detail::require_length(s, q);
    const std::size_t n = s.size();
    IntMatrix r = detail::embed(s.matrix(), 2);
    r(n + 1, n) = 1;
    for (std::size_t i = 0; i < n; ++i) r(i, n + 1) = q[i];
    return SeifertMatrix::validate(std::move(r));
}

enum class EnlargementMove { lambda2, lambda3 };

struct Reduction {
    SeifertMatrix inner;
    EnlargementMove move;
    std::vector<IntMatrix::Entry> q;
};

/// Inverse enlargement: strips the last two rows and columns when they match
/// the Λ2 or Λ3 template literally. No change of basis is attempted.
inline std::optional<Reduction> try_reduce(const SeifertMatrix& s) {
    const std::size_t size = s.size();
    if (size < 2) return std::nullopt;
    const std::size_t n = size - 2, u = n, v = n + 1;
    const IntMatrix& m = s.matrix();

    auto inner_form = [&] {
        IntMatrix inner(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inner(i, j) = m(i, j);
        return SeifertMatrix::validate(std::move(inner));
    };
    auto zero_column_above = [&](std::size_t col) {
        for (std::size_t i = 0; i < n; ++i)
            if (m(i, col) != 0) return false;
        return true;
    };
    auto zero_row_left = [&](std::size_t row) {
        for (std::size_t j = 0; j < n; ++j)
            if (m(row, j) != 0) return false;
        return true;
    };

    if (zero_column_above(u) && zero_column_above(v) && zero_row_left(u) && m(u, u) == 0 && m(u, v) == 1 &&
        m(v, u) == 0 && m(v, v) == 0) {
        std::vector<IntMatrix::Entry> q(n);
        for (std::size_t j = 0; j < n; ++j) q[j] = m(v, j);
        return Reduction{inner_form(), EnlargementMove::lambda2, std::move(q)};
    }
    if (zero_column_above(u) && zero_row_left(u) && zero_row_left(v) && m(u, u) == 0 && m(u, v) == 0 &&
        m(v, u) == 1 && m(v, v) == 0) {
        std::vector<IntMatrix::Entry> q(n);
        for (std::size_t i = 0; i < n; ++i) q[i] = m(i, v);
        return Reduction{inner_form(), EnlargementMove::lambda3, std::move(q)};
    }
    return std::nullopt;
}

/// Block-diagonal stacking; the unknot form is the unit.
inline SeifertMatrix connect_sum_form(const SeifertMatrix& a, const SeifertMatrix& b) {
    return SeifertMatrix::validate(block_diagonal(a.matrix(), b.matrix()));
}

}  // namespace knotlab
