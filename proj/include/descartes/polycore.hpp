#pragma once

// Exact univariate polynomial arithmetic over Q and certified real-root
// counting. Nothing in this module touches floating point.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "descartes/errors.hpp"
#include "descartes/sign_pattern.hpp"

namespace descartes {

/// Univariate polynomial with exact rational coefficients a_0 ... a_d,
/// constant term first. Coefficients are trimmed on construction so a nonzero
/// polynomial always has a nonzero leading coefficient; the zero polynomial
/// (no coefficients, degree -1) only shows up as an intermediate result.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<mpq_class> coeffs_low_to_high);

  /// Coefficients listed leading term first, the way they are usually written:
  /// from_leading({1, 3, 2}) is x^2 + 3x + 2.
  static RationalPolynomial from_leading(const std::vector<mpq_class>& coeffs_high_to_low);
  static RationalPolynomial constant(const mpq_class& c);
  static RationalPolynomial monomial(int exponent, const mpq_class& c = 1);
  /// x - r
  static RationalPolynomial linear_root(const mpq_class& r);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of x^exponent; zero outside the stored range.
  const mpq_class& coeff(int exponent) const;
  const mpq_class& leading() const;
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

  mpq_class operator()(const mpq_class& x) const;

  RationalPolynomial monic() const;
  /// P(c x)
  RationalPolynomial scaled_argument(const mpq_class& c) const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const mpq_class& c);

  friend RationalPolynomial operator+(RationalPolynomial lhs, const RationalPolynomial& rhs) { return lhs += rhs; }
  friend RationalPolynomial operator-(RationalPolynomial lhs, const RationalPolynomial& rhs) { return lhs -= rhs; }
  friend RationalPolynomial operator*(RationalPolynomial lhs, const RationalPolynomial& rhs) { return lhs *= rhs; }
  friend RationalPolynomial operator*(RationalPolynomial lhs, const mpq_class& c) { return lhs *= c; }
  friend RationalPolynomial operator*(const mpq_class& c, RationalPolynomial rhs) { return rhs *= c; }
  RationalPolynomial operator-() const;

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// Human-readable form such as "x^3 - 3/2*x + 1".
  std::string to_string() const;

 private:
  void trim();

  std::vector<mpq_class> coeffs_;
};

struct DivMod {
  RationalPolynomial quotient;
  RationalPolynomial remainder;
};

DivMod divmod(const RationalPolynomial& num, const RationalPolynomial& den);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// Exact formal derivative. Throws DegreeUnderflow on constants.
RationalPolynomial derivative(const RationalPolynomial& p);
/// j-th derivative; j may be 0.
RationalPolynomial derivative(const RationalPolynomial& p, int order);

/// P / gcd(P, P'), monic: same roots, all simple.
RationalPolynomial squarefree_part(const RationalPolynomial& p);
bool is_squarefree(const RationalPolynomial& p);

/// Yun decomposition P = lc * f_1 * f_2^2 * ... ; entry i-1 holds f_i (monic,
/// possibly the constant 1).
std::vector<RationalPolynomial> squarefree_decomposition(const RationalPolynomial& p);

/// Interval endpoint that may be -inf or +inf.
struct Bound {
  enum class Kind { NegInfinity, Finite, PosInfinity };
  Kind kind = Kind::Finite;
  mpq_class value;

  static Bound neg_infinity() { return {Kind::NegInfinity, 0}; }
  static Bound pos_infinity() { return {Kind::PosInfinity, 0}; }
  static Bound at(const mpq_class& v) { return {Kind::Finite, v}; }
};

/// Number of distinct real roots of a squarefree P in (a, b]. Throws
/// NotSquarefree when gcd(P, P') is nontrivial.
int sturm_count(const RationalPolynomial& p, const Bound& a, const Bound& b);

/// Verified root signature. pos and neg count distinct roots; zero roots are
/// reported apart from both.
struct RootCount {
  int pos = 0;
  int neg = 0;
  bool zero_root = false;
  /// Complex-conjugate pairs of the squarefree part.
  int complex_pairs = 0;
  /// Sum of multiplicities over all complex roots; equals the degree.
  int multiplicity_total = 0;
  /// Real roots counted with multiplicity (zero included).
  int real_with_multiplicity = 0;
  bool squarefree = true;

  friend bool operator==(const RootCount&, const RootCount&) = default;
};

RootCount root_count(const RationalPolynomial& p);

/// Signs of a_d, ..., a_0. Throws VanishingCoefficient if any is zero.
SignPattern sign_pattern_of(const RationalPolynomial& p);

/// (-1)^d P(-x): negates the roots.
RationalPolynomial negate_transform(const RationalPolynomial& p);
/// x^d P(1/x) / P(0): inverts the roots. Throws ZeroConstantTerm when a_0 = 0.
RationalPolynomial reciprocal_transform(const RationalPolynomial& p);

/// Canonical "numerator/denominator" text used in serialized records.
std::string rational_to_string(const mpq_class& q);
mpq_class rational_from_string(const std::string& text);

}  // namespace descartes
