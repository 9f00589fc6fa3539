#pragma once

#include <string_view>

namespace dfdio {

/// Three-valued exact order, plus Indeterminate for the screening path.
/// Exact comparators never produce Indeterminate.
enum class Comparison { less, equal, greater, indeterminate };

constexpr std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::less: return "less";
    case Comparison::equal: return "equal";
    case Comparison::greater: return "greater";
    default: return "indeterminate";
  }
}

/// Collapse the sign of an exact comparison (e.g. mpz cmp) to a Comparison.
constexpr Comparison comparison_from_sign(int sign) {
  if (sign < 0) return Comparison::less;
  if (sign > 0) return Comparison::greater;
  return Comparison::equal;
}

constexpr Comparison flip(Comparison c) {
  if (c == Comparison::less) return Comparison::greater;
  if (c == Comparison::greater) return Comparison::less;
  return c;
}

}  // namespace dfdio
