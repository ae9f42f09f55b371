#pragma once

// Sign patterns, admissible pairs, couples and the Z2 x Z2 action generated by
// P(x) -> (-1)^d P(-x) and P(x) -> x^d P(1/x) / P(0).

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "descartes/sign_pattern.hpp"

namespace descartes {

struct DescartesPair {
  int c = 0;  ///< sign changes
  int p = 0;  ///< sign preservations

  friend bool operator==(const DescartesPair&, const DescartesPair&) = default;
};

struct AdmissiblePair {
  int pos = 0;
  int neg = 0;

  static AdmissiblePair parse(const std::string& text);  ///< "pos,neg"
  std::string to_string() const;

  friend auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;
};

/// A sign pattern together with a pair admissible for it.
struct Couple {
  SignPattern sp;
  AdmissiblePair ap;

  int degree() const { return sp.degree(); }
  /// "((+,-,-,-,+),(0,2))"
  std::string to_string() const;
  /// "+---+ 0,2": the compact key used by the store.
  std::string key() const;

  friend auto operator<=>(const Couple&, const Couple&) = default;
};

DescartesPair descartes_pair(const SignPattern& sp);

bool is_admissible(const SignPattern& sp, const AdmissiblePair& ap);

/// All admissible pairs, (pos, neg) descending lexicographically.
std::vector<AdmissiblePair> admissible_pairs(const SignPattern& sp);

/// Validates admissibility; throws InvalidArgument otherwise.
Couple make_couple(const SignPattern& sp, const AdmissiblePair& ap);

enum class LeadingSigns { PlusOnly, Both };

/// Visits every sign pattern of degree d in lexicographic order (+ before -).
void for_each_sign_pattern(int d, LeadingSigns leading, const std::function<void(const SignPattern&)>& visit);

/// Visits every couple of degree d: patterns lexicographically, then pairs in
/// descending order.
void for_each_couple(int d, LeadingSigns leading, const std::function<void(const Couple&)>& visit);
std::vector<Couple> enumerate_couples(int d, LeadingSigns leading);

/// 2 * sum_c C(d,c) (floor(c/2)+1) (floor((d-c)/2)+1) for Both, half of that
/// for PlusOnly.
std::uint64_t couple_count_closed_form(int d, LeadingSigns leading);

/// (-1)^d P(-x) on couples: flips the signs at exponents of parity opposite to
/// d and swaps pos/neg.
Couple act_negate(const Couple& couple);
/// x^d P(1/x)/P(0) on couples: reads the pattern backwards (leading sign
/// renormalized to +); pair unchanged.
Couple act_reverse(const Couple& couple);

struct Orbit {
  std::vector<Couple> members;  ///< sorted, distinct
  Couple canonical;             ///< least member

  std::size_t size() const { return members.size(); }
  bool contains(const Couple& c) const;
};

/// Closure of the couple (its pattern normalized to leading +) under both
/// generators.
Orbit orbit_of(const Couple& couple);

/// Every orbit of leading-+ couples of degree d once, ordered by canonical
/// member.
std::vector<Orbit> enumerate_orbits(int d);

}  // namespace descartes
