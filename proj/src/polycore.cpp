#include "descartes/polycore.hpp"

#include <algorithm>
#include <sstream>

namespace descartes {

namespace {

const mpq_class kZero{0};

// Integer coefficients, constant term first. Sturm chains run on these
// because pseudo-remainders with content removal stay much smaller than the
// rational remainder sequence.
using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

void make_primitive(IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

IntPoly to_primitive_integer(const RationalPolynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    mpz_class v = l / c.get_den();
    out.push_back(v * c.get_num());
  }
  make_primitive(out);
  return out;
}

IntPoly int_derivative(const IntPoly& p) {
  IntPoly out;
  for (std::size_t j = 1; j < p.size(); ++j) out.push_back(p[j] * static_cast<unsigned long>(j));
  trim(out);
  make_primitive(out);
  return out;
}

// lc(b)^k * a = q * b + r where k is the number of elimination steps taken.
// Returns r and writes k.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b, int& steps) {
  const int db = degree(b);
  const mpz_class& lc = b.back();
  steps = 0;
  mpz_class c;
  while (!a.empty() && degree(a) >= db) {
    c = a.back();
    const int shift = degree(a) - db;
    for (auto& coeff : a) coeff *= lc;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= c * b[static_cast<std::size_t>(j)];
    a.pop_back();
    trim(a);
    ++steps;
  }
  return a;
}

// Sturm chain of p, each element primitive with the sign a true negated
// remainder would have. The last element is gcd(p, p') up to a constant.
std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain{p};
  if (degree(p) < 1) return chain;
  chain.push_back(int_derivative(p));
  while (true) {
    const IntPoly& b = chain.back();
    if (degree(b) < 1) break;
    int steps = 0;
    IntPoly r = pseudo_remainder(chain[chain.size() - 2], b, steps);
    if (r.empty()) break;
    make_primitive(r);
    // -rem(a, b) has the sign of -sign(lc(b))^steps * r.
    const bool lc_negative = sgn(b.back()) < 0;
    const bool flip_sign = !(lc_negative && (steps % 2 == 1));
    if (flip_sign) {
      for (auto& c : r) c = -c;
    }
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_at_pos_infinity(const IntPoly& p) { return sgn(p.back()); }

int sign_at_neg_infinity(const IntPoly& p) {
  const int s = sgn(p.back());
  return (degree(p) % 2 == 0) ? s : -s;
}

// Sign of p(num/den) with den > 0, via the homogenized integer sum.
int sign_at(const IntPoly& p, const mpq_class& x) {
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = 0;
  mpz_class den_pow = 1;
  // Horner on numerator with powers of den weighting the lower terms.
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * num + p[i] * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

int sign_at(const IntPoly& p, const Bound& b) {
  switch (b.kind) {
    case Bound::Kind::NegInfinity: return sign_at_neg_infinity(p);
    case Bound::Kind::PosInfinity: return sign_at_pos_infinity(p);
    case Bound::Kind::Finite: return sign_at(p, b.value);
  }
  return 0;
}

template <typename SignFn>
int variations(const std::vector<IntPoly>& chain, SignFn&& sign_of) {
  int count = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign_of(q);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

bool less_than(const Bound& a, const Bound& b) {
  using K = Bound::Kind;
  if (a.kind == K::PosInfinity || b.kind == K::NegInfinity) return false;
  if (a.kind == K::NegInfinity || b.kind == K::PosInfinity) return true;
  return a.value < b.value;
}

struct SturmSignature {
  int pos = 0;
  int neg_or_zero = 0;
  bool squarefree = true;
};

SturmSignature signature_from_chain(const std::vector<IntPoly>& chain) {
  SturmSignature out;
  out.squarefree = degree(chain.back()) == 0;
  const int v_neg = variations(chain, sign_at_neg_infinity);
  const int v_zero = variations(chain, [](const IntPoly& q) { return q.empty() ? 0 : sgn(q.front()); });
  const int v_pos = variations(chain, sign_at_pos_infinity);
  out.pos = v_zero - v_pos;
  out.neg_or_zero = v_neg - v_zero;
  return out;
}

RationalPolynomial derivative_or_zero(const RationalPolynomial& p) {
  return p.degree() < 1 ? RationalPolynomial{} : derivative(p);
}

}  // namespace

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coeffs_low_to_high)
    : coeffs_(std::move(coeffs_low_to_high)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial RationalPolynomial::from_leading(const std::vector<mpq_class>& coeffs_high_to_low) {
  return RationalPolynomial(std::vector<mpq_class>(coeffs_high_to_low.rbegin(), coeffs_high_to_low.rend()));
}

RationalPolynomial RationalPolynomial::constant(const mpq_class& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(int exponent, const mpq_class& c) {
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(exponent) + 1, kZero);
  coeffs.back() = c;
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial RationalPolynomial::linear_root(const mpq_class& r) { return RationalPolynomial({-r, 1}); }

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpq_class& RationalPolynomial::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

const mpq_class& RationalPolynomial::leading() const {
  if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

mpq_class RationalPolynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

RationalPolynomial RationalPolynomial::monic() const {
  RationalPolynomial out = *this;
  if (is_zero()) return out;
  const mpq_class inv = 1 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

RationalPolynomial RationalPolynomial::scaled_argument(const mpq_class& c) const {
  RationalPolynomial out = *this;
  mpq_class power = 1;
  for (auto& coeff : out.coeffs_) {
    coeff *= power;
    power *= c;
  }
  out.trim();
  return out;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpq_class> out(coeffs_.size() + rhs.coeffs_.size() - 1, kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const mpq_class& c) {
  for (auto& coeff : coeffs_) coeff *= c;
  trim();
  return *this;
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = degree(); j >= 0; --j) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || j == 0) {
      os << mag.get_str();
      if (j > 0) os << "*";
    }
    if (j >= 1) os << "x";
    if (j >= 2) os << "^" << j;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Division, gcd, derivatives

DivMod divmod(const RationalPolynomial& num, const RationalPolynomial& den) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  std::vector<mpq_class> rem = num.coeffs();
  const int dd = den.degree();
  const int dn = num.degree();
  if (dn < dd) return {RationalPolynomial{}, num};
  std::vector<mpq_class> quot(static_cast<std::size_t>(dn - dd) + 1, kZero);
  const mpq_class inv_lc = 1 / den.leading();
  for (int k = dn - dd; k >= 0; --k) {
    const mpq_class q = rem[static_cast<std::size_t>(k + dd)] * inv_lc;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * den.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a;
  RationalPolynomial y = b;
  while (!y.is_zero()) {
    RationalPolynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

RationalPolynomial derivative(const RationalPolynomial& p) {
  if (p.degree() < 1) throw Error(ErrorKind::DegreeUnderflow, "derivative of a constant polynomial");
  std::vector<mpq_class> out;
  out.reserve(static_cast<std::size_t>(p.degree()));
  for (int j = 1; j <= p.degree(); ++j) out.push_back(p.coeff(j) * j);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial derivative(const RationalPolynomial& p, int order) {
  RationalPolynomial out = p;
  for (int k = 0; k < order; ++k) out = derivative(out);
  return out;
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.degree() < 1) throw Error(ErrorKind::DegreeUnderflow, "squarefree part of a constant polynomial");
  const RationalPolynomial g = gcd(p, derivative(p));
  return divmod(p, g).quotient.monic();
}

bool is_squarefree(const RationalPolynomial& p) {
  if (p.degree() < 1) return true;
  return degree(sturm_chain(to_primitive_integer(p)).back()) == 0;
}

std::vector<RationalPolynomial> squarefree_decomposition(const RationalPolynomial& p) {
  if (p.degree() < 1) throw Error(ErrorKind::DegreeUnderflow, "squarefree decomposition of a constant");
  std::vector<RationalPolynomial> factors;
  const RationalPolynomial monic_p = p.monic();
  const RationalPolynomial dp = derivative(monic_p);
  RationalPolynomial a = gcd(monic_p, dp);
  RationalPolynomial b = divmod(monic_p, a).quotient;
  RationalPolynomial c = divmod(dp, a).quotient;
  RationalPolynomial d = c - derivative_or_zero(b);
  while (b.degree() >= 1) {
    RationalPolynomial f = gcd(b, d);
    factors.push_back(f);
    b = divmod(b, f).quotient;
    c = divmod(d, f).quotient;
    d = c - derivative_or_zero(b);
  }
  return factors;
}

// ---------------------------------------------------------------------------
// Root counting

int sturm_count(const RationalPolynomial& p, const Bound& a, const Bound& b) {
  if (p.degree() < 1) throw Error(ErrorKind::DegreeUnderflow, "root counting needs degree >= 1");
  if (!less_than(a, b)) throw Error(ErrorKind::InvalidArgument, "sturm_count needs a < b");
  const auto chain = sturm_chain(to_primitive_integer(p));
  if (degree(chain.back()) != 0) throw Error(ErrorKind::NotSquarefree, p.to_string());
  const int va = variations(chain, [&](const IntPoly& q) { return sign_at(q, a); });
  const int vb = variations(chain, [&](const IntPoly& q) { return sign_at(q, b); });
  return va - vb;
}

RootCount root_count(const RationalPolynomial& p) {
  if (p.degree() < 1) throw Error(ErrorKind::DegreeUnderflow, "root counting needs degree >= 1");
  RootCount out;
  out.zero_root = p.coeff(0) == 0;
  out.multiplicity_total = p.degree();

  IntPoly ip = to_primitive_integer(p);
  auto chain = sturm_chain(ip);
  out.squarefree = degree(chain.back()) == 0;
  int sqf_degree = p.degree();
  if (!out.squarefree) {
    const RationalPolynomial sqf = squarefree_part(p);
    sqf_degree = sqf.degree();
    chain = sturm_chain(to_primitive_integer(sqf));
  }
  const SturmSignature sig = signature_from_chain(chain);
  out.pos = sig.pos;
  out.neg = sig.neg_or_zero - (out.zero_root ? 1 : 0);
  const int distinct_real = out.pos + out.neg + (out.zero_root ? 1 : 0);
  out.complex_pairs = (sqf_degree - distinct_real) / 2;

  if (out.squarefree) {
    out.real_with_multiplicity = distinct_real;
  } else {
    const auto factors = squarefree_decomposition(p);
    int total = 0;
    int real = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const int mult = static_cast<int>(i) + 1;
      const RationalPolynomial& f = factors[i];
      if (f.degree() < 1) continue;
      total += mult * f.degree();
      real += mult * sturm_count(f, Bound::neg_infinity(), Bound::pos_infinity());
    }
    out.multiplicity_total = total;
    out.real_with_multiplicity = real;
  }
  return out;
}

SignPattern sign_pattern_of(const RationalPolynomial& p) {
  if (p.degree() < 1) throw Error(ErrorKind::DegreeUnderflow, "sign pattern needs degree >= 1");
  std::vector<Sign> signs;
  signs.reserve(static_cast<std::size_t>(p.degree()) + 1);
  for (int j = p.degree(); j >= 0; --j) {
    const int s = sgn(p.coeff(j));
    if (s == 0) {
      throw Error(ErrorKind::VanishingCoefficient,
                  "coefficient of x^" + std::to_string(j) + " vanishes in " + p.to_string());
    }
    signs.push_back(s > 0 ? Sign::Plus : Sign::Minus);
  }
  return SignPattern(std::move(signs));
}

RationalPolynomial negate_transform(const RationalPolynomial& p) {
  std::vector<mpq_class> out = p.coeffs();
  const int d = p.degree();
  for (int j = 0; j <= d; ++j) {
    if ((d - j) % 2 != 0) out[static_cast<std::size_t>(j)] = -out[static_cast<std::size_t>(j)];
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial reciprocal_transform(const RationalPolynomial& p) {
  if (p.is_zero() || p.coeff(0) == 0) {
    throw Error(ErrorKind::ZeroConstantTerm, "reciprocal transform needs P(0) != 0");
  }
  std::vector<mpq_class> out(p.coeffs().rbegin(), p.coeffs().rend());
  const mpq_class inv = 1 / p.coeff(0);
  for (auto& c : out) c *= inv;
  return RationalPolynomial(std::move(out));
}

std::string rational_to_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rational_from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw Error(ErrorKind::Parse, "bad rational \"" + text + "\"");
  if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in \"" + text + "\"");
  q.canonicalize();
  return q;
}

}  // namespace descartes
