#include "descartes/realize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace descartes {

namespace {

RationalPolynomial from_integers(const std::vector<mpz_class>& coeffs) {
  return RationalPolynomial(std::vector<mpq_class>(coeffs.begin(), coeffs.end()));
}

// Multiplies p (constant term first) by a1 x + a0.
void multiply_linear(std::vector<mpz_class>& p, const mpz_class& a0, const mpz_class& a1) {
  p.emplace_back(0);
  for (std::size_t j = p.size() - 1; j > 0; --j) p[j] = p[j] * a0 + p[j - 1] * a1;
  p[0] *= a0;
}

// Multiplies p by a2 x^2 + a1 x + a0.
void multiply_quadratic(std::vector<mpz_class>& p, const mpz_class& a0, const mpz_class& a1, const mpz_class& a2) {
  p.emplace_back(0);
  p.emplace_back(0);
  for (std::size_t j = p.size() - 1; j > 1; --j) p[j] = p[j] * a0 + p[j - 1] * a1 + p[j - 2] * a2;
  p[1] = p[1] * a0 + p[0] * a1;
  p[0] *= a0;
}

bool matches_pattern(const std::vector<mpz_class>& p, const SignPattern& sp) {
  const int d = sp.degree();
  if (static_cast<int>(p.size()) != d + 1) return false;
  for (int j = 0; j <= d; ++j) {
    const int s = sgn(p[static_cast<std::size_t>(j)]);
    if (s == 0 || s != to_int(sp.of_exponent(j))) return false;
  }
  return true;
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

SignPattern pattern_from_shape(const TwoChangeShape& shape) {
  std::vector<Sign> signs;
  signs.insert(signs.end(), static_cast<std::size_t>(shape.m), Sign::Plus);
  signs.insert(signs.end(), static_cast<std::size_t>(shape.n), Sign::Minus);
  signs.insert(signs.end(), static_cast<std::size_t>(shape.q), Sign::Plus);
  return SignPattern(std::move(signs));
}

std::mt19937_64 seeded_engine(const Couple& couple, std::uint64_t seed) {
  std::vector<std::uint32_t> material{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (char ch : couple.key()) material.push_back(static_cast<unsigned char>(ch));
  std::seed_seq seq(material.begin(), material.end());
  return std::mt19937_64(seq);
}

// Root-space descent. Parameters are log-moduli of the real roots followed by
// (log modulus, logit angle) for each complex pair. The penalty measures how
// far each coefficient is from its target sign, relative to the coefficient of
// the polynomial with all roots moved to the negative axis.
struct RootModel {
  int pos = 0;
  int neg = 0;
  int pairs = 0;

  int size() const { return pos + neg + 2 * pairs; }

  double pair_angle(double t) const { return 3.14159265358979323846 / (1.0 + std::exp(-t)); }

  double penalty(const std::vector<double>& x, const SignPattern& sp) const {
    std::vector<double> p{1.0};
    std::vector<double> a{1.0};
    auto mul = [](std::vector<double>& v, double c1, double c0) {
      v.push_back(0.0);
      for (std::size_t j = v.size() - 1; j > 0; --j) v[j] = v[j] * c0 + v[j - 1] * c1;
      v[0] *= c0;
    };
    auto mul2 = [](std::vector<double>& v, double c1, double c0) {
      v.push_back(0.0);
      v.push_back(0.0);
      for (std::size_t j = v.size() - 1; j > 1; --j) v[j] = v[j] * c0 + v[j - 1] * c1 + v[j - 2];
      v[1] = v[1] * c0 + v[0] * c1;
      v[0] *= c0;
    };
    std::size_t i = 0;
    for (int r = 0; r < pos; ++r, ++i) {
      mul(p, 1.0, -std::exp(x[i]));
      mul(a, 1.0, std::exp(x[i]));
    }
    for (int r = 0; r < neg; ++r, ++i) {
      mul(p, 1.0, std::exp(x[i]));
      mul(a, 1.0, std::exp(x[i]));
    }
    for (int r = 0; r < pairs; ++r, i += 2) {
      const double rho = std::exp(x[i]);
      const double b = -2.0 * rho * std::cos(pair_angle(x[i + 1]));
      mul2(p, b, rho * rho);
      mul2(a, std::abs(b), rho * rho);
    }
    double total = 0.0;
    for (int j = 0; j <= sp.degree(); ++j) {
      const double rel = to_int(sp.of_exponent(j)) * p[static_cast<std::size_t>(j)] / a[static_cast<std::size_t>(j)];
      total += std::max(0.0, 1e-3 - rel);
    }
    return std::isfinite(total) ? total : std::numeric_limits<double>::infinity();
  }

  RationalPolynomial exact(const std::vector<double>& x) const {
    auto round = [](double v) {
      int e = 0;
      const double m = std::frexp(v, &e);
      mpq_class q(static_cast<long>(std::llround(std::ldexp(m, 24))));
      if (e - 24 >= 0) q *= mpq_class(mpz_class(1) << (e - 24));
      else q /= mpq_class(mpz_class(1) << (24 - e));
      return q;
    };
    RationalPolynomial p = RationalPolynomial::constant(1);
    std::size_t i = 0;
    for (int r = 0; r < pos; ++r, ++i) p = p * RationalPolynomial::linear_root(round(std::exp(x[i])));
    for (int r = 0; r < neg; ++r, ++i) p = p * RationalPolynomial::linear_root(-round(std::exp(x[i])));
    for (int r = 0; r < pairs; ++r, i += 2) {
      const double rho = std::exp(x[i]);
      const mpq_class b = round(-2.0 * rho * std::cos(pair_angle(x[i + 1])));
      const mpq_class c = round(rho * rho);
      p = p * RationalPolynomial(std::vector<mpq_class>{c, b, 1});
    }
    return p;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Witness

std::optional<Witness> Witness::verify(const RationalPolynomial& polynomial, const Couple& couple) {
  if (polynomial.degree() != couple.degree() || polynomial.degree() < 1) return std::nullopt;
  for (const auto& c : polynomial.coeffs()) {
    if (c == 0) return std::nullopt;
  }
  if (sign_pattern_of(polynomial) != couple.sp) return std::nullopt;
  const RootCount rc = root_count(polynomial);
  if (!rc.squarefree || rc.zero_root || rc.pos != couple.ap.pos || rc.neg != couple.ap.neg) return std::nullopt;
  return Witness(polynomial, couple, rc);
}

// ---------------------------------------------------------------------------
// Constructions

AdmissiblePair minimal_pair(const SignPattern& sp) {
  const bool constant_plus = sp.normalized().constant() == Sign::Plus;
  if (sp.degree() % 2 == 0) return constant_plus ? AdmissiblePair{0, 0} : AdmissiblePair{1, 1};
  return constant_plus ? AdmissiblePair{0, 1} : AdmissiblePair{1, 0};
}

Witness realize_minimal(const SignPattern& sp) {
  const int d = sp.degree();
  const Couple target{sp, minimal_pair(sp)};
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) coeffs[static_cast<std::size_t>(j)] = to_int(sp.of_exponent(j));
  constexpr int kMaxDoublings = 512;
  for (int iter = 0; iter <= kMaxDoublings; ++iter) {
    if (auto w = Witness::verify(RationalPolynomial(coeffs), target)) return *w;
    coeffs[0] *= 2;
  }
  throw Error(ErrorKind::IterationBudgetExceeded, "constant-term boosting did not settle for " + sp.to_string());
}

Concatenation concatenate(const RationalPolynomial& p1, const RationalPolynomial& p2, int max_halvings) {
  const RationalPolynomial a = p1.monic();
  const RationalPolynomial b = p2.monic();
  const SignPattern sp1 = sign_pattern_of(a);
  const SignPattern sp2 = sign_pattern_of(b);
  const RootCount rc1 = root_count(a);
  const RootCount rc2 = root_count(b);

  std::vector<Sign> signs = sp1.signs();
  const bool keep = sp1.constant() == Sign::Plus;
  for (std::size_t i = 1; i < sp2.size(); ++i) signs.push_back(keep ? sp2[i] : flip(sp2[i]));
  Concatenation out{RationalPolynomial{}, mpq_class(1), SignPattern(std::move(signs)),
                    AdmissiblePair{rc1.pos + rc2.pos, rc1.neg + rc2.neg}};
  const Couple target{out.predicted_pattern, out.predicted_pair};

  const int d2 = b.degree();
  for (int h = 0; h <= max_halvings; ++h) {
    // eps^{d2} P2(x/eps): coefficient of x^j picks up eps^{d2-j}.
    std::vector<mpq_class> scaled(b.coeffs());
    mpq_class power = 1;
    for (int j = d2; j >= 0; --j) {
      scaled[static_cast<std::size_t>(j)] *= power;
      power *= out.epsilon;
    }
    RationalPolynomial product = a * RationalPolynomial(std::move(scaled));
    if (Witness::verify(product, target)) {
      out.polynomial = std::move(product);
      return out;
    }
    out.epsilon /= 2;
  }
  throw Error(ErrorKind::EpsilonExhausted,
              "no epsilon up to 2^-" + std::to_string(max_halvings) + " splices " + a.to_string() + " and " + b.to_string());
}

Witness realize_hyperbolic(const SignPattern& sp, int max_halvings) {
  const Couple target{sp, {descartes_pair(sp).c, descartes_pair(sp).p}};
  if (sp.leading() == Sign::Minus) {
    const Witness w = realize_hyperbolic(sp.negated(), max_halvings);
    if (auto out = Witness::verify(-w.polynomial(), target)) return *out;
    throw Error(ErrorKind::InvalidArgument, "negated hyperbolic witness failed verification");
  }
  RationalPolynomial poly;
  if (sp.degree() == 1) {
    poly = RationalPolynomial::linear_root(sp[1] == Sign::Minus ? 1 : -1);
  } else {
    const Sign u = sp[sp.size() - 2];
    const Sign v = sp[sp.size() - 1];
    const Witness head = realize_hyperbolic(sp.truncated(), max_halvings);
    const RationalPolynomial tail = RationalPolynomial::linear_root(u != v ? 1 : -1);
    poly = concatenate(head.polynomial(), tail, max_halvings).polynomial;
  }
  if (auto out = Witness::verify(poly, target)) return *out;
  throw Error(ErrorKind::InvalidArgument, "hyperbolic construction failed verification for " + sp.to_string());
}

// ---------------------------------------------------------------------------
// Criteria

std::optional<TwoChangeShape> two_change_shape(const SignPattern& sp) {
  const SignPattern n = sp.normalized();
  if (n.sign_changes() != 2) return std::nullopt;
  TwoChangeShape shape;
  std::size_t i = 0;
  while (n[i] == Sign::Plus) ++i;
  shape.m = static_cast<int>(i);
  while (n[i] == Sign::Minus) ++i;
  shape.n = static_cast<int>(i) - shape.m;
  shape.q = static_cast<int>(n.size() - i);
  return shape;
}

mpq_class kappa(const TwoChangeShape& shape, int d) {
  mpq_class left(d - shape.m - 1, shape.m);
  mpq_class right(d - shape.q - 1, shape.q);
  left.canonicalize();
  right.canonicalize();
  return left * right;
}

std::optional<CriterionHit> kappa_criterion(const TwoChangeShape& shape, int d) {
  if (shape.m < 1 || shape.n < 1 || shape.q < 1 || shape.m + shape.n + shape.q != d + 1) {
    throw Error(ErrorKind::InvalidArgument, "two-change shape does not match degree " + std::to_string(d));
  }
  if (kappa(shape, d) < 4) return std::nullopt;
  return CriterionHit{make_couple(pattern_from_shape(shape), {0, d - 2}), "kappa"};
}

Verdict two_change_2v_realizable(const TwoChangeShape& shape, int d, int v) {
  if (v < 0 || v > d - 2 || (d - 2 - v) % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "v=" + std::to_string(v) + " is not admissible for degree " + std::to_string(d));
  }
  const bool excluded = d % 2 == 0 && shape.m % 2 == 0 && shape.n == 1 && v == 0;
  return excluded ? Verdict::Excluded : Verdict::Realizable;
}

bool ratio_criterion(const Couple& couple) {
  return std::min(couple.ap.pos, couple.ap.neg) > floor_div(couple.degree() - 4, 3);
}

std::optional<Verdict> even_series_status(const SignPattern& pattern, const AdmissiblePair& ap) {
  const SignPattern sp = pattern.normalized();
  const int d = sp.degree();
  if (d % 2 != 0 || sp.constant() != Sign::Plus) return std::nullopt;
  int ell = 0;
  for (int j = 1; j < d; ++j) {
    const Sign s = sp.of_exponent(j);
    if (j % 2 == 1 && s != Sign::Plus) return std::nullopt;
    if (j % 2 == 0 && s == Sign::Minus) ++ell;
  }
  if (ell == 0 || !is_admissible(sp, ap)) return std::nullopt;
  const bool excluded = ap.neg == 0 && ap.pos >= 2 && ap.pos <= 2 * ell;
  return excluded ? Verdict::Excluded : Verdict::Realizable;
}

SignPattern odd_series_pattern(int d, int k) {
  if (d < 5 || d % 2 == 0 || k < 1 || k > (d - 3) / 2) {
    throw Error(ErrorKind::BadSeriesParams, "need odd d >= 5 and 1 <= k <= (d-3)/2, got d=" + std::to_string(d) +
                                                ", k=" + std::to_string(k));
  }
  std::vector<Sign> signs{Sign::Plus, Sign::Plus};
  for (int i = 0; i < k; ++i) {
    signs.push_back(Sign::Minus);
    signs.push_back(Sign::Plus);
  }
  signs.insert(signs.end(), static_cast<std::size_t>(d - 2 * k - 1), Sign::Minus);
  return SignPattern(std::move(signs));
}

std::optional<int> odd_series_index(const SignPattern& pattern) {
  const SignPattern sp = pattern.normalized();
  const int d = sp.degree();
  if (d < 5 || d % 2 == 0) return std::nullopt;
  for (int k = 1; k <= (d - 3) / 2; ++k) {
    if (odd_series_pattern(d, k) == sp) return k;
  }
  return std::nullopt;
}

std::optional<Verdict> odd_series_status(int d, int k, const AdmissiblePair& ap) {
  const SignPattern sp = odd_series_pattern(d, k);
  if (!is_admissible(sp, ap)) return std::nullopt;
  if (ap.neg == 0 && ap.pos >= 3) return Verdict::Excluded;
  return Verdict::Realizable;
}

std::optional<CriterionHit> criteria_exclusion(const Couple& couple) {
  const int d = couple.degree();
  for (const auto& member : orbit_of(couple).members) {
    if (auto shape = two_change_shape(member.sp); shape && member.ap == AdmissiblePair{0, d - 2}) {
      if (auto hit = kappa_criterion(*shape, d)) return hit;
    }
    if (even_series_status(member.sp, member.ap) == Verdict::Excluded) return CriterionHit{member, "even-series"};
    if (auto k = odd_series_index(member.sp)) {
      if (odd_series_status(d, *k, member.ap) == Verdict::Excluded) return CriterionHit{member, "odd-series"};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Random search

SearchResult random_search(const Couple& input, const ClassifyOptions& options) {
  const Couple couple{input.sp.normalized(), input.ap};
  const SignPattern& sp = couple.sp;
  const int d = sp.degree();
  const int complex_pairs = (d - couple.ap.pos - couple.ap.neg) / 2;
  auto rng = seeded_engine(couple, options.seed);

  std::uniform_int_distribution<int> exponent(options.exponent_min, options.exponent_max);
  std::uniform_int_distribution<int> spread(0, 40);
  std::uniform_int_distribution<int> mantissa(16, 31);
  std::uniform_int_distribution<int> cosine(-63, 63);

  SearchResult result;
  std::vector<mpz_class> poly;
  mpz_class magnitude;
  // The first fifth of the budget goes to independent samples, the rest to
  // descent episodes.
  const std::uint64_t sampled = options.budget / 5;
  for (std::uint64_t i = 0; i < sampled; ++i) {
    ++result.tried;
    if (i % 4 == 0) {
      // Dyadic coefficients +-2^e, shifted so every entry is an integer.
      poly.assign(static_cast<std::size_t>(d) + 1, 0);
      for (int j = 0; j <= d; ++j) {
        const int e = j == d ? 0 : exponent(rng);
        mpz_ui_pow_ui(magnitude.get_mpz_t(), 2, static_cast<unsigned long>(e - options.exponent_min));
        poly[static_cast<std::size_t>(j)] = to_int(sp.of_exponent(j)) > 0 ? magnitude : mpz_class(-magnitude);
      }
      if (auto w = Witness::verify(from_integers(poly), couple)) {
        result.witness = std::move(w);
        result.strategy = "coefficient-search";
        return result;
      }
      continue;
    }
    // Product of sampled real roots and complex pairs; root counts hold by
    // construction, so only the sign pattern has to be hit.
    const int s = spread(rng);
    std::uniform_int_distribution<int> shift(0, s);
    auto sample_magnitude = [&] {
      mpz_ui_pow_ui(magnitude.get_mpz_t(), 2, static_cast<unsigned long>(shift(rng)));
      magnitude *= mantissa(rng);
      return magnitude;
    };
    poly.assign(1, 1);
    for (int r = 0; r < couple.ap.pos; ++r) multiply_linear(poly, -sample_magnitude(), 1);
    for (int r = 0; r < couple.ap.neg; ++r) multiply_linear(poly, sample_magnitude(), 1);
    for (int r = 0; r < complex_pairs; ++r) {
      const mpz_class rho = sample_magnitude();
      multiply_quadratic(poly, 64 * rho * rho, -2 * cosine(rng) * rho, 64);
    }
    if (!matches_pattern(poly, sp)) continue;
    if (auto w = Witness::verify(from_integers(poly), couple)) {
      result.witness = std::move(w);
      result.strategy = "root-search";
      return result;
    }
  }

  const RootModel model{couple.ap.pos, couple.ap.neg, complex_pairs};
  const auto n = static_cast<std::size_t>(model.size());
  std::normal_distribution<double> start(0.0, 2.0);
  std::normal_distribution<double> unit(0.0, 1.0);
  constexpr std::uint64_t kEpisode = 3000;
  std::vector<double> x(n);
  std::vector<double> y(n);
  while (result.tried < options.budget) {
    for (auto& v : x) v = start(rng);
    double f = model.penalty(x, sp);
    double step = 1.0;
    for (std::uint64_t it = 0; it < kEpisode && result.tried < options.budget; ++it) {
      ++result.tried;
      for (std::size_t k = 0; k < n; ++k) y[k] = x[k] + step * unit(rng);
      const double g = model.penalty(y, sp);
      if (g <= f) {
        x.swap(y);
        f = g;
      } else {
        step *= 0.995;
        if (step < 1e-4) step = 0.5;
      }
      if (f == 0.0) {
        if (auto w = Witness::verify(model.exact(x), couple)) {
          result.witness = std::move(w);
          result.strategy = "root-descent";
          return result;
        }
        break;
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Classification

std::string to_string(Status status) {
  switch (status) {
    case Status::Realizable: return "Realizable";
    case Status::NonrealizableTheorem: return "NonrealizableTheorem";
    case Status::NonrealizableCriterion: return "NonrealizableCriterion";
    case Status::Conjectured: return "Conjectured";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

Status status_from_string(const std::string& text) {
  for (Status s : {Status::Realizable, Status::NonrealizableTheorem, Status::NonrealizableCriterion,
                   Status::Conjectured, Status::Unknown}) {
    if (to_string(s) == text) return s;
  }
  throw Error(ErrorKind::Parse, "unknown status \"" + text + "\"");
}

Classifier::Classifier(ClassifyOptions options) : options_(options) {}

ClassificationRecord Classifier::classify(const Couple& couple) {
  const Couple normalized = make_couple(couple.sp.normalized(), couple.ap);
  const Orbit orbit = orbit_of(normalized);
  ClassificationRecord rec = map_to_member(classify_canonical(orbit.canonical), normalized);
  if (couple.sp.leading() == Sign::Minus && rec.witness) {
    rec.witness = Witness::verify(-rec.witness->polynomial(), couple);
  }
  rec.couple = couple;
  return rec;
}

ClassificationRecord Classifier::find_witness(const Couple& couple) {
  const Couple normalized = make_couple(couple.sp.normalized(), couple.ap);
  const Orbit orbit = orbit_of(normalized);
  ClassificationRecord rec = map_to_member(constructive_and_search(orbit.canonical), normalized);
  if (couple.sp.leading() == Sign::Minus && rec.witness) {
    rec.witness = Witness::verify(-rec.witness->polynomial(), couple);
  }
  rec.couple = couple;
  return rec;
}

ClassificationRecord Classifier::classify_canonical(const Couple& canonical) {
  if (auto it = memo_.find(canonical); it != memo_.end()) return it->second;

  ClassificationRecord rec;
  rec.couple = canonical;
  if (auto entry = table_lookup(canonical)) {
    rec.status = entry->conjectured ? Status::Conjectured : Status::NonrealizableTheorem;
    rec.tag = entry->tag;
    rec.provenance = "table";
  } else if (auto hit = criteria_exclusion(canonical)) {
    rec.status = Status::NonrealizableCriterion;
    rec.tag = hit->criterion;
    rec.provenance = "criterion on " + hit->couple.to_string();
  } else {
    rec = constructive_and_search(canonical);
  }
  memo_.emplace(canonical, rec);
  return rec;
}

ClassificationRecord Classifier::constructive_and_search(const Couple& couple) {
  ClassificationRecord rec;
  rec.couple = couple;
  auto accept = [&](Witness w, std::string provenance) {
    rec.status = Status::Realizable;
    rec.witness = std::move(w);
    rec.provenance = std::move(provenance);
    return rec;
  };
  try {
    if (couple.ap == minimal_pair(couple.sp)) return accept(realize_minimal(couple.sp), "minimal");
    const DescartesPair dp = descartes_pair(couple.sp);
    if (couple.ap == AdmissiblePair{dp.c, dp.p}) {
      return accept(realize_hyperbolic(couple.sp, options_.max_halvings), "hyperbolic");
    }
  } catch (const Error&) {
    // Fall through to the remaining strategies.
  }
  if (options_.use_concatenation && couple.degree() >= 2) {
    if (auto found = try_concatenation(couple)) return accept(std::move(found->first), std::move(found->second));
  }
  SearchResult search = random_search(couple, options_);
  rec.candidates = search.tried;
  if (search.witness) return accept(std::move(*search.witness), search.strategy);
  rec.status = Status::Unknown;
  rec.provenance = "budget-exhausted";
  return rec;
}

std::optional<std::pair<Witness, std::string>> Classifier::try_concatenation(const Couple& couple) {
  const SignPattern& sp = couple.sp;
  const int d = sp.degree();
  for (int d2 = 1; d2 < d; ++d2) {
    const int d1 = d - d2;
    const std::vector<Sign>& all = sp.signs();
    const SignPattern head(std::vector<Sign>(all.begin(), all.begin() + d1 + 1));
    const bool keep = head.constant() == Sign::Plus;
    std::vector<Sign> tail_signs{Sign::Plus};
    for (int i = d1 + 1; i <= d; ++i) {
      const Sign s = all[static_cast<std::size_t>(i)];
      tail_signs.push_back(keep ? s : flip(s));
    }
    const SignPattern tail(std::move(tail_signs));
    for (const auto& tail_ap : admissible_pairs(tail)) {
      const AdmissiblePair head_ap{couple.ap.pos - tail_ap.pos, couple.ap.neg - tail_ap.neg};
      if (!is_admissible(head, head_ap)) continue;
      const ClassificationRecord tail_rec = classify(Couple{tail, tail_ap});
      if (tail_rec.status != Status::Realizable) continue;
      const ClassificationRecord head_rec = classify(Couple{head, head_ap});
      if (head_rec.status != Status::Realizable) continue;
      try {
        Concatenation cat =
            concatenate(head_rec.witness->polynomial(), tail_rec.witness->polynomial(), options_.max_halvings);
        if (auto w = Witness::verify(cat.polynomial, couple)) {
          return std::make_pair(std::move(*w), "concatenation " + std::to_string(d1) + "+" + std::to_string(d2));
        }
      } catch (const Error&) {
        continue;
      }
    }
  }
  return std::nullopt;
}

ClassificationRecord Classifier::map_to_member(const ClassificationRecord& canonical_record, const Couple& target) const {
  if (canonical_record.couple == target) return canonical_record;
  ClassificationRecord rec = canonical_record;
  rec.couple = target;
  if (!rec.witness) return rec;

  const Couple& from = canonical_record.couple;
  const RationalPolynomial& p = canonical_record.witness->polynomial();
  std::optional<RationalPolynomial> image;
  if (act_negate(from) == target) {
    image = negate_transform(p);
  } else if (act_reverse(from) == target) {
    image = reciprocal_transform(p);
  } else if (act_reverse(act_negate(from)) == target) {
    image = reciprocal_transform(negate_transform(p));
  }
  if (!image) throw Error(ErrorKind::InvalidArgument, target.to_string() + " is not in the orbit of " + from.to_string());
  rec.witness = Witness::verify(*image, target);
  if (!rec.witness) throw Error(ErrorKind::InvalidArgument, "orbit image of a witness failed verification");
  rec.provenance += " (orbit image)";
  return rec;
}

ClassificationRecord classify(const Couple& couple, const ClassifyOptions& options) {
  Classifier classifier(options);
  return classifier.classify(couple);
}

void classify_degree(int d, const ClassifyOptions& options, const std::function<void(const ClassificationRecord&)>& emit,
                     const std::function<bool(const Couple&)>& skip) {
  Classifier classifier(options);
  for_each_couple(d, LeadingSigns::PlusOnly, [&](const Couple& c) {
    if (skip && skip(c)) return;
    emit(classifier.classify(c));
  });
}

bool reverify(const ClassificationRecord& record) {
  switch (record.status) {
    case Status::Realizable: {
      if (!record.witness) return false;
      auto again = Witness::verify(record.witness->polynomial(), record.couple);
      return again.has_value() && again->verified() == record.witness->verified();
    }
    case Status::NonrealizableTheorem:
    case Status::Conjectured: {
      auto entry = table_lookup(record.couple);
      return entry && entry->conjectured == (record.status == Status::Conjectured);
    }
    case Status::NonrealizableCriterion:
      return criteria_exclusion(record.couple).has_value();
    case Status::Unknown:
      return !record.witness.has_value();
  }
  return false;
}

}  // namespace descartes
