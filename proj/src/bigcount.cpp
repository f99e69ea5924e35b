#include "ekr/bigcount.hpp"
#include "ekr/error.hpp"

namespace ekr {

BigCount binom(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a)
    return 0;
  if (b > a - b)
    b = a - b;
  BigCount result = 1;
  // Each prefix product is itself a binomial, so the division is exact.
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

BigCount falling(std::int64_t a, std::int64_t t) {
  BigCount result = 1;
  for (std::int64_t i = 0; i < t; ++i)
    result *= a - i;
  return result;
}

BigCount factorial(std::int64_t k) {
  BigCount result = 1;
  for (std::int64_t i = 2; i <= k; ++i)
    result *= i;
  return result;
}

std::string to_string(const BigCount &x) { return x.str(); }

std::string to_string(const Rational &x) {
  auto num = boost::multiprecision::numerator(x);
  auto den = boost::multiprecision::denominator(x);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Graph6MalformedHeader: return "graph6-malformed-header";
  case ErrorKind::Graph6MalformedByte: return "graph6-malformed-byte";
  case ErrorKind::Graph6Truncated: return "graph6-truncated";
  case ErrorKind::Graph6TrailingGarbage: return "graph6-trailing-garbage";
  case ErrorKind::TooManyVertices: return "too-many-vertices";
  case ErrorKind::UnknownGenerator: return "unknown-generator";
  case ErrorKind::BadGeneratorArgument: return "bad-generator-argument";
  case ErrorKind::BadEdgeList: return "bad-edge-list";
  case ErrorKind::VertexOutOfRange: return "vertex-out-of-range";
  case ErrorKind::InvalidSetSize: return "invalid-set-size";
  case ErrorKind::NotAForest: return "not-a-forest";
  case ErrorKind::NotATree: return "not-a-tree";
  case ErrorKind::PreconditionViolated: return "precondition-violated";
  case ErrorKind::MissingField: return "missing-field";
  case ErrorKind::SearchLimitExceeded: return "search-limit-exceeded";
  }
  return "unknown-error";
}

} // namespace ekr
