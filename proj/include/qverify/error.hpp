#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qverify {

enum class ErrorKind {
  ZeroLeadingCoefficient,
  OrderInsufficient,
  NonTruncatable,
  DegenerateVWP,
  DegenerateDenominator,
  LowerParameterPole,
  ValuationStall,
  TailNotDecreasing,
  SizeMismatch,
  DegenerateFamily,
  PteConditionFailed,
  SamplerExhausted,
  UnknownIdentity,
  BadParameter,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the
/// verification driver in particular) can classify it without parsing text.
class QError : public std::runtime_error {
 public:
  QError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qverify
