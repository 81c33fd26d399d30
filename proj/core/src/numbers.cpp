#include "tgkz/numbers.hpp"

#include <cctype>

#include "tgkz/error.hpp"

namespace tgkz {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-')
    throw Error(ErrorCode::Malformed, "numbers", "not an exact rational: '" + std::string(text) + "'");
  Integer d(strip_plus(den));
  if (d == 0) throw Error(ErrorCode::Malformed, "numbers", "zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Malformed: return "MALFORMED";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::UnsupportedCharacterValue: return "UNSUPPORTED_CHARACTER_VALUE";
    case ErrorCode::EmptyCone: return "EMPTY_CONE";
    case ErrorCode::NotPointed: return "NOT_POINTED";
    case ErrorCode::NotFullDimensional: return "NOT_FULL_DIMENSIONAL";
    case ErrorCode::LatticeMismatch: return "LATTICE_MISMATCH";
    case ErrorCode::NotSaturated: return "NOT_SATURATED";
    case ErrorCode::NotGraded: return "NOT_GRADED";
    case ErrorCode::SliceTooSmall: return "SLICE_TOO_SMALL";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
    case ErrorCode::HypothesisFailure: return "HYPOTHESIS_FAILURE";
    case ErrorCode::InternalCheckFailed: return "INTERNAL_CHECK_FAILED";
  }
  return "UNKNOWN";
}

}  // namespace tgkz
