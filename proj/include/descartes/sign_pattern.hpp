#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace descartes {

/// Plus orders before Minus, which fixes the lexicographic order used for
/// enumeration and for picking canonical orbit members.
enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };

constexpr Sign flip(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr int to_int(Sign s) noexcept { return s == Sign::Plus ? 1 : -1; }
constexpr char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

/// Signs of the coefficients of a degree-d polynomial, stored leading term
/// first: (s_d, s_{d-1}, ..., s_0).
class SignPattern {
 public:
  SignPattern() = default;
  explicit SignPattern(std::vector<Sign> signs);

  /// Accepts "+-+" as well as "+,-,+" or "(+, -, +)".
  static SignPattern parse(std::string_view text);
  static SignPattern all_plus(int degree);

  int degree() const noexcept { return static_cast<int>(signs_.size()) - 1; }
  std::size_t size() const noexcept { return signs_.size(); }

  /// Position i counted from the leading coefficient.
  Sign operator[](std::size_t i) const { return signs_[i]; }
  /// Sign of the coefficient of x^exponent.
  Sign of_exponent(int exponent) const { return signs_[static_cast<std::size_t>(degree() - exponent)]; }

  Sign leading() const { return signs_.front(); }
  Sign constant() const { return signs_.back(); }

  const std::vector<Sign>& signs() const noexcept { return signs_; }

  int sign_changes() const;

  /// Pattern with every sign flipped (the pattern of -P).
  SignPattern negated() const;
  /// Pattern with leading sign forced to +, flipping everything if needed.
  SignPattern normalized() const;
  /// Drops the last (constant-term) sign: the pattern of P'.
  SignPattern truncated() const;

  std::string to_string() const;

  friend auto operator<=>(const SignPattern&, const SignPattern&) = default;
  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  std::vector<Sign> signs_;
};

}  // namespace descartes
