#pragma once

// Derivative chains: D-sequences (real roots and complex pairs of P, P', ...)
// and sequences of admissible pairs (SAPs) tied together by Rolle's theorem.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "descartes/polycore.hpp"
#include "descartes/signcomb.hpp"

namespace descartes {

/// Entries (r_j, 2 c_j) for j = 0 .. d-1: real roots and twice the number of
/// complex pairs of the j-th derivative, counted with multiplicity.
struct DSequence {
  std::vector<std::pair<int, int>> entries;

  int degree() const { return static_cast<int>(entries.size()); }
  std::string to_string() const;

  friend auto operator<=>(const DSequence&, const DSequence&) = default;
};

/// r_j + 2c_j = d - j, r_j <= r_{j+1} + 1, r_{d-1} = 1, all entries >= 0.
bool is_valid_dsequence(const DSequence& seq);

/// Every D-sequence of length d, descending lexicographically in (r_0, r_1, ...).
std::vector<DSequence> enumerate_dsequences(int d);

/// Measured D-sequence of P (roots counted with multiplicity).
DSequence dsequence_of(const RationalPolynomial& p);

/// A sign pattern together with one admissible pair per derivative level.
struct SAPRecord {
  SignPattern sp;
  std::vector<AdmissiblePair> pairs;  ///< (pos_k, neg_k), k = 0 .. d-1

  std::string to_string() const;

  friend auto operator<=>(const SAPRecord&, const SAPRecord&) = default;
};

/// sigma_0 .. sigma_{d-1}: each obtained from the previous by dropping the
/// constant-term sign.
std::vector<SignPattern> truncated_patterns(const SignPattern& sp);

/// Admissibility at every level, the Rolle inequalities
///   pos_{k+1} >= pos_k - 1, neg_{k+1} >= neg_k - 1,
///   pos_{k+1} + neg_{k+1} >= pos_k + neg_k - 1,
/// the parity condition pos_{k+1} + neg_{k+1} + 3 - pos_k - neg_k in 2N, and
/// the sign law sgn a_k = (-1)^{pos_k}.
bool is_valid_sap(const SAPRecord& sap);

/// All SAPs of a leading-+ pattern, descending lexicographically in
/// (pos_0, neg_0, pos_1, ...). When level0 is given only SAPs starting with
/// that pair are produced.
std::vector<SAPRecord> enumerate_saps(const SignPattern& sp,
                                      const std::optional<AdmissiblePair>& level0 = std::nullopt);

/// sigma_0 = (+, (-1)^{pos_{d-1}}, ..., (-1)^{pos_0}).
SignPattern reconstruct_sp(const std::vector<AdmissiblePair>& pairs);

/// The only SAP with pos_0 + neg_0 = d; throws UniquenessViolated if the
/// enumeration disagrees.
SAPRecord unique_full_sap(const SignPattern& sp);

/// All SAPs extending the couple (pos_0, neg_0) = ap.
std::vector<SAPRecord> extend_couple(const Couple& couple);

enum class ChainPolicy { Flag, Strict };

struct SapProfile {
  SAPRecord record;
  /// False when some derivative has a multiple root.
  bool all_simple = true;
  /// Derivative orders whose roots are not all simple.
  std::vector<int> multiple_levels;
};

/// Measured (pos_k, neg_k) of P^{(k)} for k = 0 .. d-1; P is normalized to a
/// positive leading coefficient. With ChainPolicy::Strict a multiple root in
/// the chain throws MultipleRootInChain.
SapProfile sap_profile_of(const RationalPolynomial& p, ChainPolicy policy = ChainPolicy::Flag);

struct KnownSaps {
  std::vector<std::pair<SAPRecord, std::string>> records;
  /// False outside degrees 1..5, where nothing is tabulated.
  bool supported = true;
};

KnownSaps known_nonrealizable_saps(int d);

struct ChainSearch {
  std::optional<RationalPolynomial> polynomial;
  std::uint64_t tried = 0;
};

/// Randomized search for a polynomial with the given D-sequence whose
/// derivatives of every order have simple roots only.
ChainSearch realize_dsequence(const DSequence& seq, std::uint64_t budget = 50000, std::uint64_t seed = 1);

/// Randomized search for a polynomial realizing the couple (SP, SAP) with
/// simple roots throughout. A failed search proves nothing.
ChainSearch search_sap_witness(const SAPRecord& sap, std::uint64_t budget = 50000, std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// The S/T families (x+1)^3 (x-a)^2 and (x+a)^2 (x-1)^3.

enum class Lemma2Family { S, T };

RationalPolynomial lemma2_polynomial(Lemma2Family family, const mpq_class& a);

/// Sign pattern of the family member at a > 0. Throws VanishingCoefficient
/// at parameters where a coefficient vanishes.
SignPattern lemma2_sign_pattern(Lemma2Family family, const mpq_class& a);

/// Coefficient of x^j of the family, as a polynomial in a (index j).
std::vector<RationalPolynomial> lemma2_coefficients(Lemma2Family family);

/// Real number p + q sqrt(6), or +infinity.
struct QuadraticSurd {
  mpq_class rational;
  mpq_class sqrt6_coeff;
  bool infinite = false;
};

/// Rational bounds lo < x < hi (lo == hi when x is rational) with
/// hi - lo <= width.
std::pair<mpq_class, mpq_class> bracket(const QuadraticSurd& x, const mpq_class& width);

struct Lemma2Row {
  Lemma2Family family;
  QuadraticSurd lower;
  QuadraticSurd upper;
  SignPattern sp;
};

/// The seven tabulated parameter intervals and their sign patterns.
std::vector<Lemma2Row> lemma2_table();

/// An isolated positive parameter value where some coefficient changes sign.
struct Threshold {
  int exponent = 0;  ///< which coefficient vanishes
  mpq_class lo;
  mpq_class hi;  ///< lo == hi for an exact rational threshold
};

/// Positive roots of every coefficient polynomial, isolated by exact Sturm
/// bisection to width <= width, sorted by position.
std::vector<Threshold> lemma2_thresholds(Lemma2Family family, const mpq_class& width);

}  // namespace descartes
