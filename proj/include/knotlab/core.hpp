#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace knotlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised for malformed or out-of-contract mathematical input: an invalid
/// Seifert matrix, a bad PD code, a size mismatch. The CLI maps it to exit 1.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw DomainError("integer overflow in addition");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw DomainError("integer overflow in multiplication");
    }
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) {
        throw DomainError("integer overflow in negation");
    }
    return -a;
}

inline std::int64_t to_int64(const Integer& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw DomainError("value " + v.str() + " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace detail
}  // namespace knotlab
