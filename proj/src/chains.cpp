#include "descartes/chains.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace descartes {

// ---------------------------------------------------------------------------
// D-sequences

std::string DSequence::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < entries.size(); ++j) {
    if (j) out += ",";
    out += "(" + std::to_string(entries[j].first) + "," + std::to_string(entries[j].second) + ")";
  }
  return out + ")";
}

bool is_valid_dsequence(const DSequence& seq) {
  const int d = seq.degree();
  if (d < 1) return false;
  for (int j = 0; j < d; ++j) {
    const auto [r, two_c] = seq.entries[static_cast<std::size_t>(j)];
    if (r < 0 || two_c < 0 || two_c % 2 != 0 || r + two_c != d - j) return false;
    if (j + 1 < d && r > seq.entries[static_cast<std::size_t>(j + 1)].first + 1) return false;
  }
  return seq.entries.back().first == 1;
}

std::vector<DSequence> enumerate_dsequences(int d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "D-sequences need d >= 1");
  std::vector<DSequence> out;
  std::vector<int> r(static_cast<std::size_t>(d));
  r.back() = 1;
  std::function<void(int)> fill = [&](int j) {
    if (j < 0) {
      DSequence seq;
      for (int i = 0; i < d; ++i) seq.entries.emplace_back(r[static_cast<std::size_t>(i)], d - i - r[static_cast<std::size_t>(i)]);
      out.push_back(std::move(seq));
      return;
    }
    const int cap = std::min(d - j, r[static_cast<std::size_t>(j + 1)] + 1);
    for (int v = d - j; v >= 0; v -= 2) {
      if (v > cap) continue;
      r[static_cast<std::size_t>(j)] = v;
      fill(j - 1);
    }
  };
  fill(d - 2);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

DSequence dsequence_of(const RationalPolynomial& p) {
  const int d = p.degree();
  if (d < 1) throw Error(ErrorKind::DegreeUnderflow, "D-sequence of a constant");
  DSequence seq;
  RationalPolynomial q = p;
  for (int j = 0; j < d; ++j) {
    const RootCount rc = root_count(q);
    seq.entries.emplace_back(rc.real_with_multiplicity, (d - j) - rc.real_with_multiplicity);
    if (j + 1 < d) q = derivative(q);
  }
  return seq;
}

// ---------------------------------------------------------------------------
// Sequences of admissible pairs

std::string SAPRecord::to_string() const {
  std::string out = "(" + sp.to_string();
  for (const auto& ap : pairs) out += ",(" + ap.to_string() + ")";
  return out + ")";
}

std::vector<SignPattern> truncated_patterns(const SignPattern& sp) {
  std::vector<SignPattern> out{sp};
  while (out.back().degree() > 1) out.push_back(out.back().truncated());
  return out;
}

namespace {

bool rolle_step_ok(const AdmissiblePair& prev, const AdmissiblePair& next) {
  const int sum_prev = prev.pos + prev.neg;
  const int sum_next = next.pos + next.neg;
  const int parity_term = sum_next + 3 - sum_prev;
  return next.pos >= prev.pos - 1 && next.neg >= prev.neg - 1 && sum_next >= sum_prev - 1 && parity_term >= 2 &&
         parity_term % 2 == 0;
}

bool sign_law_ok(const SignPattern& sp, int k, const AdmissiblePair& ap) {
  const Sign expected = ap.pos % 2 == 0 ? Sign::Plus : Sign::Minus;
  return sp.of_exponent(k) == expected;
}

}  // namespace

bool is_valid_sap(const SAPRecord& sap) {
  const int d = sap.sp.degree();
  if (sap.sp.leading() != Sign::Plus || static_cast<int>(sap.pairs.size()) != d) return false;
  const auto levels = truncated_patterns(sap.sp);
  for (int k = 0; k < d; ++k) {
    const AdmissiblePair& ap = sap.pairs[static_cast<std::size_t>(k)];
    if (!is_admissible(levels[static_cast<std::size_t>(k)], ap)) return false;
    if (!sign_law_ok(sap.sp, k, ap)) return false;
    if (k > 0 && !rolle_step_ok(sap.pairs[static_cast<std::size_t>(k - 1)], ap)) return false;
  }
  return true;
}

std::vector<SAPRecord> enumerate_saps(const SignPattern& sp, const std::optional<AdmissiblePair>& level0) {
  if (sp.leading() != Sign::Plus) {
    throw Error(ErrorKind::InvalidArgument, "SAP enumeration expects a leading + pattern, got " + sp.to_string());
  }
  const int d = sp.degree();
  const auto levels = truncated_patterns(sp);
  std::vector<std::vector<AdmissiblePair>> candidates;
  for (int k = 0; k < d; ++k) {
    std::vector<AdmissiblePair> level;
    for (const auto& ap : admissible_pairs(levels[static_cast<std::size_t>(k)])) {
      if (k == 0 && level0 && ap != *level0) continue;
      if (sign_law_ok(sp, k, ap)) level.push_back(ap);
    }
    candidates.push_back(std::move(level));
  }

  std::vector<SAPRecord> out;
  std::vector<AdmissiblePair> chosen;
  std::function<void(int)> walk = [&](int k) {
    if (k == d) {
      out.push_back({sp, chosen});
      return;
    }
    for (const auto& ap : candidates[static_cast<std::size_t>(k)]) {
      if (k > 0 && !rolle_step_ok(chosen.back(), ap)) continue;
      chosen.push_back(ap);
      walk(k + 1);
      chosen.pop_back();
    }
  };
  walk(0);
  return out;
}

SignPattern reconstruct_sp(const std::vector<AdmissiblePair>& pairs) {
  if (pairs.empty()) throw Error(ErrorKind::InvalidArgument, "empty SAP");
  std::vector<Sign> signs{Sign::Plus};
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) signs.push_back(it->pos % 2 == 0 ? Sign::Plus : Sign::Minus);
  return SignPattern(std::move(signs));
}

SAPRecord unique_full_sap(const SignPattern& sp) {
  const int d = sp.degree();
  std::vector<SAPRecord> full;
  for (auto& sap : enumerate_saps(sp)) {
    const auto& first = sap.pairs.front();
    if (first.pos + first.neg == d) full.push_back(std::move(sap));
  }
  const DescartesPair dp = descartes_pair(sp);
  if (full.size() != 1) {
    throw Error(ErrorKind::UniquenessViolated,
                std::to_string(full.size()) + " SAPs with pos_0 + neg_0 = d for " + sp.to_string());
  }
  if (full.front().pairs.front() != AdmissiblePair{dp.c, dp.p}) {
    throw Error(ErrorKind::UniquenessViolated, "full SAP does not start with the Descartes pair for " + sp.to_string());
  }
  return full.front();
}

std::vector<SAPRecord> extend_couple(const Couple& couple) { return enumerate_saps(couple.sp, couple.ap); }

SapProfile sap_profile_of(const RationalPolynomial& input, ChainPolicy policy) {
  const RationalPolynomial p = input.leading() < 0 ? -input : input;
  SapProfile profile;
  profile.record.sp = sign_pattern_of(p);
  const int d = p.degree();
  RationalPolynomial q = p;
  for (int k = 0; k < d; ++k) {
    const RootCount rc = root_count(q);
    if (!rc.squarefree) {
      if (policy == ChainPolicy::Strict) {
        throw Error(ErrorKind::MultipleRootInChain,
                    "derivative of order " + std::to_string(k) + " of " + p.to_string() + " has a multiple root");
      }
      profile.all_simple = false;
      profile.multiple_levels.push_back(k);
    }
    profile.record.pairs.push_back({rc.pos, rc.neg});
    if (k + 1 < d) q = derivative(q);
  }
  return profile;
}

KnownSaps known_nonrealizable_saps(int d) {
  struct Raw {
    const char* sp;
    std::vector<AdmissiblePair> pairs;
  };
  KnownSaps out;
  std::vector<Raw> raw;
  std::string tag;
  if (d >= 1 && d <= 3) return out;
  if (d == 4) {
    tag = "sap-degree-4-table";
    raw = {{"++-++", {{2, 0}, {2, 1}, {1, 1}, {0, 1}}}};
  } else if (d == 5) {
    tag = "sap-degree-5-table";
    raw = {
        {"++-+++", {{2, 1}, {2, 0}, {2, 1}, {1, 1}, {0, 1}}},
        {"++-+++", {{0, 1}, {2, 0}, {2, 1}, {1, 1}, {0, 1}}},
        {"++-++-", {{3, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}}},
        {"++-++-", {{1, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}}},
        {"++-+--", {{3, 0}, {3, 1}, {2, 1}, {1, 1}, {0, 1}}},
    };
  } else {
    out.supported = false;
    return out;
  }
  for (auto& r : raw) out.records.emplace_back(SAPRecord{SignPattern::parse(r.sp), std::move(r.pairs)}, tag);
  return out;
}

// ---------------------------------------------------------------------------
// Search harnesses

namespace {

// Product of pos positive roots, neg negative roots and pairs complex pairs,
// all with dyadic magnitudes between 2^-6 and 2^12.
RationalPolynomial sample_polynomial(int pos, int neg, int pairs, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mantissa(1, 64);
  std::uniform_int_distribution<int> shift(-6, 6);
  std::uniform_int_distribution<int> cosine(-63, 63);
  auto magnitude = [&] {
    mpq_class m(mantissa(rng));
    const int e = shift(rng);
    if (e >= 0) m *= mpq_class(mpz_class(1) << e);
    else m /= mpq_class(mpz_class(1) << -e);
    return m;
  };
  RationalPolynomial p = RationalPolynomial::constant(1);
  for (int i = 0; i < pos; ++i) p = p * RationalPolynomial::linear_root(magnitude());
  for (int i = 0; i < neg; ++i) p = p * RationalPolynomial::linear_root(-magnitude());
  for (int i = 0; i < pairs; ++i) {
    const mpq_class rho = magnitude();
    const mpq_class b = -2 * rho * mpq_class(cosine(rng), 64);
    p = p * RationalPolynomial(std::vector<mpq_class>{rho * rho, b, 1});
  }
  return p;
}

bool chain_simple(const RationalPolynomial& p) {
  RationalPolynomial q = p;
  for (int k = 0; k < p.degree(); ++k) {
    if (!is_squarefree(q)) return false;
    q = derivative(q);
  }
  return true;
}

std::mt19937_64 chain_engine(const std::string& key, std::uint64_t seed) {
  std::vector<std::uint32_t> material{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (char ch : key) material.push_back(static_cast<unsigned char>(ch));
  std::seed_seq seq(material.begin(), material.end());
  return std::mt19937_64(seq);
}

}  // namespace

ChainSearch realize_dsequence(const DSequence& seq, std::uint64_t budget, std::uint64_t seed) {
  if (!is_valid_dsequence(seq)) throw Error(ErrorKind::InvalidArgument, seq.to_string() + " is not a D-sequence");
  auto rng = chain_engine(seq.to_string(), seed);
  const int real = seq.entries.front().first;
  const int pairs = seq.entries.front().second / 2;
  std::uniform_int_distribution<int> split(0, real);
  ChainSearch out;
  while (out.tried < budget) {
    ++out.tried;
    const int pos = split(rng);
    RationalPolynomial p = sample_polynomial(pos, real - pos, pairs, rng);
    if (dsequence_of(p) == seq && chain_simple(p)) {
      out.polynomial = std::move(p);
      break;
    }
  }
  return out;
}

ChainSearch search_sap_witness(const SAPRecord& sap, std::uint64_t budget, std::uint64_t seed) {
  if (!is_valid_sap(sap)) throw Error(ErrorKind::InvalidArgument, sap.to_string() + " is not a SAP");
  auto rng = chain_engine(sap.to_string(), seed);
  const AdmissiblePair level0 = sap.pairs.front();
  const int pairs = (sap.sp.degree() - level0.pos - level0.neg) / 2;
  ChainSearch out;
  while (out.tried < budget) {
    ++out.tried;
    RationalPolynomial p = sample_polynomial(level0.pos, level0.neg, pairs, rng);
    bool nonzero = true;
    for (const auto& c : p.coeffs()) nonzero = nonzero && sgn(c) != 0;
    if (!nonzero || sign_pattern_of(p) != sap.sp) continue;
    const SapProfile profile = sap_profile_of(p);
    if (profile.all_simple && profile.record == sap) {
      out.polynomial = std::move(p);
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// S/T families

namespace {

// Polynomial in x whose coefficients are polynomials in a.
using BivariatePoly = std::vector<RationalPolynomial>;

BivariatePoly multiply(const BivariatePoly& lhs, const BivariatePoly& rhs) {
  BivariatePoly out(lhs.size() + rhs.size() - 1);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs[i] * rhs[j];
  }
  return out;
}

BivariatePoly power(const BivariatePoly& base, int e) {
  BivariatePoly out{RationalPolynomial::constant(1)};
  for (int i = 0; i < e; ++i) out = multiply(out, base);
  return out;
}

const RationalPolynomial kA = RationalPolynomial::monomial(1);
const RationalPolynomial kOne = RationalPolynomial::constant(1);

// x + c, with c a polynomial in a.
BivariatePoly shifted_x(const RationalPolynomial& c) { return {c, kOne}; }

}  // namespace

std::vector<RationalPolynomial> lemma2_coefficients(Lemma2Family family) {
  if (family == Lemma2Family::S) {
    return multiply(power(shifted_x(kOne), 3), power(shifted_x(-kA), 2));
  }
  return multiply(power(shifted_x(kA), 2), power(shifted_x(-kOne), 3));
}

RationalPolynomial lemma2_polynomial(Lemma2Family family, const mpq_class& a) {
  if (a <= 0) throw Error(ErrorKind::InvalidArgument, "family parameter must be positive");
  std::vector<mpq_class> coeffs;
  for (const auto& c : lemma2_coefficients(family)) coeffs.push_back(c(a));
  return RationalPolynomial(std::move(coeffs));
}

SignPattern lemma2_sign_pattern(Lemma2Family family, const mpq_class& a) {
  return sign_pattern_of(lemma2_polynomial(family, a));
}

std::pair<mpq_class, mpq_class> bracket(const QuadraticSurd& x, const mpq_class& width) {
  if (x.infinite) throw Error(ErrorKind::InvalidArgument, "cannot bracket infinity");
  if (x.sqrt6_coeff == 0) return {x.rational, x.rational};
  mpq_class lo = 2;
  mpq_class hi = 3;
  const mpq_class scale = abs(x.sqrt6_coeff);
  while ((hi - lo) * scale > width) {
    const mpq_class mid = (lo + hi) / 2;
    if (mid * mid < 6) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  mpq_class a = x.rational + x.sqrt6_coeff * lo;
  mpq_class b = x.rational + x.sqrt6_coeff * hi;
  if (a > b) std::swap(a, b);
  return {a, b};
}

std::vector<Lemma2Row> lemma2_table() {
  const mpq_class third(1, 3);
  const QuadraticSurd zero{0, 0};
  const QuadraticSurd s1{1, -third};          // (3 - sqrt6)/3
  const QuadraticSurd s2{3, -1};              // 3 - sqrt6
  const QuadraticSurd two_thirds{mpq_class(2, 3), 0};
  const QuadraticSurd three_halves{mpq_class(3, 2), 0};
  const QuadraticSurd t1{1, third};           // (3 + sqrt6)/3
  const QuadraticSurd t2{3, 1};               // 3 + sqrt6
  const QuadraticSurd infinity{0, 0, true};
  using F = Lemma2Family;
  return {
      {F::S, zero, s1, SignPattern::parse("++++-+")},
      {F::S, s1, s2, SignPattern::parse("+++--+")},
      {F::S, s2, two_thirds, SignPattern::parse("++---+")},
      {F::S, two_thirds, three_halves, SignPattern::parse("++--++")},
      {F::T, three_halves, t1, SignPattern::parse("++-++-")},
      {F::T, t1, t2, SignPattern::parse("++--+-")},
      {F::T, t2, infinity, SignPattern::parse("+++-+-")},
  };
}

std::vector<Threshold> lemma2_thresholds(Lemma2Family family, const mpq_class& width) {
  std::vector<Threshold> out;
  const auto coeffs = lemma2_coefficients(family);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    RationalPolynomial c = coeffs[j];
    if (c.degree() < 1) continue;
    // Roots at a = 0 are outside the parameter range; divide them out.
    while (c.degree() >= 1 && c.coeff(0) == 0) c = divmod(c, kA).quotient;
    if (c.degree() < 1) continue;
    c = squarefree_part(c);
    const int exponent = static_cast<int>(j);
    if (c.degree() == 1) {
      const mpq_class root = -c.coeff(0) / c.coeff(1);
      if (root > 0) out.push_back({exponent, root, root});
      continue;
    }
    // Cauchy bound on the roots.
    mpq_class bound = 0;
    for (int i = 0; i < c.degree(); ++i) bound = std::max(bound, mpq_class(abs(c.coeff(i) / c.leading())));
    bound += 1;
    std::function<void(const mpq_class&, const mpq_class&)> isolate = [&](const mpq_class& lo, const mpq_class& hi) {
      const int n = sturm_count(c, Bound::at(lo), Bound::at(hi));
      if (n == 0) return;
      if (n == 1 && hi - lo <= width) {
        if (c(hi) == 0) {
          out.push_back({exponent, hi, hi});
        } else {
          out.push_back({exponent, lo, hi});
        }
        return;
      }
      const mpq_class mid = (lo + hi) / 2;
      isolate(lo, mid);
      isolate(mid, hi);
    };
    isolate(0, bound);
  }
  std::sort(out.begin(), out.end(), [](const Threshold& a, const Threshold& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace descartes
