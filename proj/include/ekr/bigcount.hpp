#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ekr {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the toolkit-wide boundary convention:
/// C(a, b) = 0 when a < 0, b < 0 or b > a, and C(a, 0) = 1 for a >= 0.
BigCount binom(std::int64_t a, std::int64_t b);

/// Falling factorial a (a-1) ... (a-t+1); 1 for t = 0.
BigCount falling(std::int64_t a, std::int64_t t);

BigCount factorial(std::int64_t k);

std::string to_string(const BigCount &x);
std::string to_string(const Rational &x);

} // namespace ekr
