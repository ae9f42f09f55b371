#pragma once

// Witness construction, non-realizability criteria, the known tables of
// non-realizable couples, and the budgeted classifier built on top of them.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "descartes/polycore.hpp"
#include "descartes/signcomb.hpp"

namespace descartes {

/// A polynomial certified to realize a couple. The only way to obtain one is
/// Witness::verify, which recomputes the sign pattern and the root counts
/// exactly, so a Witness never relies on how its polynomial was built.
class Witness {
 public:
  static std::optional<Witness> verify(const RationalPolynomial& polynomial, const Couple& couple);

  const RationalPolynomial& polynomial() const noexcept { return polynomial_; }
  const Couple& couple() const noexcept { return couple_; }
  const RootCount& verified() const noexcept { return verified_; }

 private:
  Witness(RationalPolynomial p, Couple c, RootCount rc)
      : polynomial_(std::move(p)), couple_(std::move(c)), verified_(rc) {}

  RationalPolynomial polynomial_;
  Couple couple_;
  RootCount verified_;
};

// ---------------------------------------------------------------------------
// Constructions

/// Constant-term boosting: unit coefficients with the signs of sp, then |a_0|
/// doubled until only the forced real roots remain.
Witness realize_minimal(const SignPattern& sp);

/// The pair realize_minimal produces: (0,0)/(1,1) for even d, (0,1)/(1,0) for
/// odd d, depending on the constant sign.
AdmissiblePair minimal_pair(const SignPattern& sp);

struct Concatenation {
  RationalPolynomial polynomial;
  mpq_class epsilon;
  SignPattern predicted_pattern;
  AdmissiblePair predicted_pair;
};

/// eps^{d2} P1(x) P2(x/eps) for the first eps in 1, 1/2, 1/4, ... whose
/// product has the spliced sign pattern and the summed root counts. Both
/// inputs are made monic first. Throws EpsilonExhausted after max_halvings.
Concatenation concatenate(const RationalPolynomial& p1, const RationalPolynomial& p2, int max_halvings = 256);

/// Realizes sp with its Descartes pair by peeling the last two signs and
/// concatenating x - 1 (signs differ) or x + 1 (signs agree).
Witness realize_hyperbolic(const SignPattern& sp, int max_halvings = 256);

// ---------------------------------------------------------------------------
// Criteria

/// m pluses, n minuses, q pluses.
struct TwoChangeShape {
  int m = 0;
  int n = 0;
  int q = 0;

  friend bool operator==(const TwoChangeShape&, const TwoChangeShape&) = default;
};

/// Present iff sp (normalized to leading +) has exactly two sign changes.
std::optional<TwoChangeShape> two_change_shape(const SignPattern& sp);

/// (d-m-1)/m * (d-q-1)/q
mpq_class kappa(const TwoChangeShape& shape, int d);

struct CriterionHit {
  Couple couple;
  std::string criterion;
};

/// Fires iff kappa >= 4; the excluded couple is (pattern, (0, d-2)).
std::optional<CriterionHit> kappa_criterion(const TwoChangeShape& shape, int d);

enum class Verdict { Realizable, Excluded };

/// Pairs (2, v) for a two-change pattern: excluded only when d and m are even,
/// n = 1 and v = 0.
Verdict two_change_2v_realizable(const TwoChangeShape& shape, int d, int v);

/// True iff min(pos, neg) > floor((d-4)/3), which guarantees realizability.
bool ratio_criterion(const Couple& couple);

/// Patterns of even degree with constant +, all odd-exponent signs +, and
/// ell >= 1 minuses among the remaining even exponents: exactly (2,0), ...,
/// (2 ell, 0) are excluded. Empty when sp is not of that form or ap is not
/// admissible.
std::optional<Verdict> even_series_status(const SignPattern& sp, const AdmissiblePair& ap);

/// (+, +, k times (-, +), d-2k-1 minuses); d odd >= 5, 1 <= k <= (d-3)/2.
SignPattern odd_series_pattern(int d, int k);
/// k such that sp == odd_series_pattern(d, k), if any.
std::optional<int> odd_series_index(const SignPattern& sp);
/// Excluded for (3,0), ..., (2k+1,0); realizable for (1,0) and for
/// (2l+1, 2r) with r >= 1. Empty when ap is not admissible for the pattern.
/// Throws BadSeriesParams for d, k out of range.
std::optional<Verdict> odd_series_status(int d, int k, const AdmissiblePair& ap);

// ---------------------------------------------------------------------------
// Known non-realizable couples

struct TableEntry {
  Couple couple;
  std::string tag;
  int stated_orbit_size = 0;
  bool conjectured = false;
};

/// The published representatives, one per orbit, in publication order.
/// Degrees 4..8 and 11, plus the conjectured degree-9 couple.
std::vector<TableEntry> table_representatives(int d);

/// table_representatives expanded to full orbits (sorted by couple).
std::vector<TableEntry> theorem_tables(int d);

/// Lookup across all degrees, including orbit images.
std::optional<TableEntry> table_lookup(const Couple& couple);

// ---------------------------------------------------------------------------
// Classification

enum class Status { Realizable, NonrealizableTheorem, NonrealizableCriterion, Conjectured, Unknown };

std::string to_string(Status status);
Status status_from_string(const std::string& text);

struct ClassificationRecord {
  Couple couple;
  Status status = Status::Unknown;
  std::optional<Witness> witness;
  /// Table citation or criterion name for non-realizable statuses.
  std::string tag;
  /// How the status was reached (construction, criterion, search...).
  std::string provenance;
  /// Random candidates tested for this couple (0 when a construction won).
  std::uint64_t candidates = 0;
};

struct ClassifyOptions {
  std::uint64_t budget = 50000;
  std::uint64_t seed = 1;
  /// Dyadic exponent range for coefficient candidates.
  int exponent_min = -24;
  int exponent_max = 24;
  int max_halvings = 256;
  bool use_concatenation = true;
};

struct SearchResult {
  std::optional<Witness> witness;
  std::uint64_t tried = 0;
  std::string strategy;
};

/// Randomized witness search: alternates dyadic-coefficient candidates
/// (+-2^e) with candidates assembled from sampled positive roots, negative
/// roots and complex pairs. Deterministic in (couple, budget, seed).
SearchResult random_search(const Couple& couple, const ClassifyOptions& options);

/// Staged classifier with a per-instance memo. Results are pure functions of
/// (couple, options): every couple is resolved through its orbit's canonical
/// member and only pure sub-results are cached.
class Classifier {
 public:
  explicit Classifier(ClassifyOptions options = {});

  /// Tables, criteria, constructions, random search, in that order.
  ClassificationRecord classify(const Couple& couple);

  /// Constructions and random search only, ignoring tables and criteria for
  /// this couple (sub-couples used by concatenation are still classified
  /// normally). Used to check table entries for consistency.
  ClassificationRecord find_witness(const Couple& couple);

  const ClassifyOptions& options() const noexcept { return options_; }

 private:
  ClassificationRecord classify_canonical(const Couple& canonical);
  ClassificationRecord constructive_and_search(const Couple& canonical);
  std::optional<std::pair<Witness, std::string>> try_concatenation(const Couple& couple);
  ClassificationRecord map_to_member(const ClassificationRecord& canonical_record, const Couple& target) const;

  ClassifyOptions options_;
  std::map<Couple, ClassificationRecord> memo_;
};

ClassificationRecord classify(const Couple& couple, const ClassifyOptions& options = {});

/// Classifies every leading-+ couple of degree d in enumeration order.
/// Couples for which skip returns true are not classified.
void classify_degree(int d, const ClassifyOptions& options, const std::function<void(const ClassificationRecord&)>& emit,
                     const std::function<bool(const Couple&)>& skip = {});

/// Non-realizability criteria applied to the couple and its orbit images.
std::optional<CriterionHit> criteria_exclusion(const Couple& couple);

/// Re-derives a record's claim from scratch: a Realizable record's witness is
/// re-verified, a table status is looked up again.
bool reverify(const ClassificationRecord& record);

}  // namespace descartes
