#pragma once

#include "knotlab/core.hpp"

#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace knotlab {

/// Integer Laurent polynomial in one formal variable.
///
/// Terms are kept as an ordered map exponent -> coefficient with no zero
/// coefficients stored, so structural equality is mathematical equality and
/// the zero polynomial has no terms. The variable has no fixed meaning: the
/// same type carries Alexander polynomials in t, Kauffman brackets in A and
/// Jones polynomials in q = t^(1/2).
class LaurentPoly {
public:
    using Exponent = std::int64_t;
    using Terms = std::map<Exponent, Integer>;

    LaurentPoly() = default;

    static LaurentPoly constant(const Integer& c) { return monomial(c, 0); }

    static LaurentPoly monomial(const Integer& c, Exponent e) {
        LaurentPoly p;
        if (c != 0) {
            p.terms_.emplace(e, c);
        }
        return p;
    }

    /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
    static LaurentPoly from_terms(std::initializer_list<std::pair<Exponent, long long>> terms) {
        LaurentPoly p;
        for (const auto& [e, c] : terms) {
            p.add_term(e, Integer(c));
        }
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    Exponent min_exponent() const {
        if (is_zero()) throw DomainError("zero polynomial has no minimum exponent");
        return terms_.begin()->first;
    }

    Exponent max_exponent() const {
        if (is_zero()) throw DomainError("zero polynomial has no maximum exponent");
        return terms_.rbegin()->first;
    }

    Integer coefficient(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(Exponent e, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator-(LaurentPoly a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                r.add_term(detail::checked_add(ea, eb), ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Multiplication by x^k.
    LaurentPoly shifted(Exponent k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), detail::checked_add(e, k), c);
        return r;
    }

    /// Substitutes x -> x^factor. A negative factor reverses term order.
    LaurentPoly scale_exponents(Exponent factor) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(detail::checked_mul(e, factor), c);
        return r;
    }

    /// Substitutes x^divisor -> x. Every exponent must be divisible.
    LaurentPoly divide_exponents(Exponent divisor) const {
        if (divisor == 0) throw DomainError("exponent divisor must be nonzero");
        LaurentPoly r;
        for (const auto& [e, c] : terms_) {
            if (e % divisor != 0) {
                throw DomainError("exponent " + std::to_string(e) + " is not divisible by " +
                                  std::to_string(divisor));
            }
            r.terms_.emplace(e / divisor, c);
        }
        return r;
    }

    /// Ascending exponent order, e.g. "t^-2 - 2t^-1 + 3 + t^4".
    std::string to_string(std::string_view var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool negative = c < 0;
            const Integer magnitude = negative ? Integer(-c) : c;
            if (first) {
                if (negative) out += '-';
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            if (e == 0 || magnitude != 1) out += magnitude.str();
            if (e != 0) {
                out += var;
                if (e != 1) {
                    out += '^';
                    out += std::to_string(e);
                }
            }
        }
        return out;
    }

    /// Inverse of to_string; whitespace between tokens is ignored and repeated
    /// exponents are summed.
    static LaurentPoly parse(std::string_view text, std::string_view var = "t");

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
    Terms terms_;
};

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, std::string_view var) : text_(text), var_(var) {}

    LaurentPoly run() {
        LaurentPoly result;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            if (at_end()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            parse_term(result, sign);
        }
        return result;
    }

private:
    void parse_term(LaurentPoly& result, int sign) {
        Integer coef = 1;
        bool have_coef = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = read_digits();
            have_coef = true;
            skip_ws();
        }
        LaurentPoly::Exponent exponent = 0;
        if (text_.substr(pos_).starts_with(var_)) {
            pos_ += var_.size();
            exponent = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                int esign = 1;
                if (!at_end() && (peek() == '-' || peek() == '+')) {
                    esign = get() == '-' ? -1 : 1;
                    skip_ws();
                }
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
                exponent = esign * to_int64(read_digits());
            }
        } else if (!have_coef) {
            fail("expected coefficient or '" + std::string(var_) + "'");
        }
        result.add_term(exponent, sign * coef);
    }

    Integer read_digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::string_view var_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline LaurentPoly LaurentPoly::parse(std::string_view text, std::string_view var) {
    return detail::PolyParser(text, var).run();
}

inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

/// x -> x^-1.
inline LaurentPoly substitute_inverse(const LaurentPoly& p) { return p.scale_exponents(-1); }

/// Exact value at a nonzero integer point.
inline Rational evaluate(const LaurentPoly& p, const Integer& x) {
    if (x == 0) throw DomainError("cannot evaluate a Laurent polynomial at 0");
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        const auto magnitude = static_cast<unsigned>(e < 0 ? -e : e);
        Integer power = boost::multiprecision::pow(x, magnitude);
        if (e < 0) {
            sum += Rational(c) / Rational(power);
        } else {
            sum += Rational(c * power);
        }
    }
    return sum;
}

/// Representative of {±x^k p} with minimum exponent 0 and a positive
/// lowest-degree coefficient.
inline LaurentPoly normalize_units(const LaurentPoly& p) {
    if (p.is_zero()) throw DomainError("cannot normalize the zero polynomial");
    LaurentPoly r = p.shifted(-p.min_exponent());
    if (r.coefficient(0) < 0) r = -r;
    return r;
}

}  // namespace knotlab
