#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace oneone {

/// Arbitrary-precision signed integer used for exponents, matrix entries and
/// polynomial coefficients.
using Integer = boost::multiprecision::cpp_int;

/// Non-negative gcd; gcd(0, 0) == 0.
Integer gcd(Integer a, Integer b);

/// Representative of a modulo m in [0, m). m must be positive.
Integer floor_mod(const Integer& a, const Integer& m);
std::int64_t floor_mod(const Integer& a, std::int64_t m);
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

std::optional<std::int64_t> to_int64(const Integer& v);

std::string to_string(const Integer& v);

}  // namespace oneone
