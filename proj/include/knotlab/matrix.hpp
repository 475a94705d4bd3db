#pragma once

#include "knotlab/core.hpp"

#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace knotlab {

/// Dense row-major integer matrix. Arithmetic is overflow-checked; any
/// overflow raises DomainError rather than wrapping.
class IntMatrix {
public:
    using Entry = std::int64_t;

    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw DomainError("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Entry& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Entry operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("matrix product size mismatch");
        IntMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Entry aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    r(i, j) = detail::checked_add(r(i, j), detail::checked_mul(aik, b(k, j)));
                }
            }
        }
        return r;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        a.require_same_shape(b);
        IntMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = detail::checked_add(a.data_[i], b.data_[i]);
        return r;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        a.require_same_shape(b);
        IntMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            r.data_[i] = detail::checked_add(a.data_[i], detail::checked_neg(b.data_[i]));
        return r;
    }

    friend IntMatrix operator*(Entry s, const IntMatrix& a) {
        IntMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = detail::checked_mul(s, a.data_[i]);
        return r;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    /// Inline form, e.g. "[[0,2],[1,0]]"; the empty matrix prints as "[]".
    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) out += ',';
            out += '[';
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += ',';
                out += std::to_string((*this)(i, j));
            }
            out += ']';
        }
        return out + "]";
    }

    /// One row per line, space-separated.
    std::string to_rows_string() const {
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += ' ';
                out += std::to_string((*this)(i, j));
            }
            out += '\n';
        }
        return out;
    }

    static IntMatrix parse(std::string_view text);

private:
    void require_same_shape(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Entry> data_;
};

namespace detail {

inline std::vector<std::vector<IntMatrix::Entry>> parse_bracketed_rows(std::string_view text) {
    std::vector<std::vector<IntMatrix::Entry>> rows;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
    };
    auto fail = [&](const std::string& what) -> void {
        throw DomainError("matrix parse error at offset " + std::to_string(pos) + ": " + what);
    };
    skip();
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    ++pos;
    while (true) {
        skip();
        if (pos >= text.size()) fail("unterminated matrix");
        if (text[pos] == ']') {
            ++pos;
            break;
        }
        if (text[pos] != '[') fail("expected '[' to open a row");
        ++pos;
        std::vector<IntMatrix::Entry> row;
        while (true) {
            skip();
            if (pos >= text.size()) fail("unterminated row");
            if (text[pos] == ']') {
                ++pos;
                break;
            }
            std::size_t start = pos;
            if (text[pos] == '-' || text[pos] == '+') ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start || !std::isdigit(static_cast<unsigned char>(text[pos - 1]))) fail("expected integer");
            row.push_back(to_int64(Integer(std::string(text.substr(start, pos - start)).erase(0, text[start] == '+'))));
        }
        rows.push_back(std::move(row));
    }
    skip();
    if (pos != text.size()) fail("trailing characters");
    return rows;
}

inline std::vector<std::vector<IntMatrix::Entry>> parse_row_lines(std::string_view text) {
    std::vector<std::vector<IntMatrix::Entry>> rows;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::vector<IntMatrix::Entry> row;
        std::string token;
        while (fields >> token) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size()) throw DomainError("matrix parse error: bad integer '" + token + "'");
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

/// Accepts "[[0,2],[1,0]]" or one whitespace-separated row per line. An
/// empty input, or "[]", is the 0x0 matrix.
inline IntMatrix IntMatrix::parse(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    std::vector<std::vector<Entry>> rows;
    if (first != std::string_view::npos && text[first] == '[') {
        rows = detail::parse_bracketed_rows(text);
    } else {
        rows = detail::parse_row_lines(text);
    }
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw DomainError("matrix rows have different lengths");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

/// Square matrix of arbitrary-precision integers, used where intermediate
/// values may outgrow 64 bits.
using BigMatrix = std::vector<std::vector<Integer>>;

inline BigMatrix to_big(const IntMatrix& m) {
    BigMatrix b(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) b[i][j] = m(i, j);
    return b;
}

/// Fraction-free Gaussian elimination (Bareiss). The 0x0 determinant is 1.
inline Integer determinant(BigMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline Integer determinant(const IntMatrix& m) {
    if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
    return determinant(to_big(m));
}

inline IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

}  // namespace knotlab
