#include "descartes/signcomb.hpp"

#include <algorithm>
#include <sstream>

#include "descartes/errors.hpp"

namespace descartes {

AdmissiblePair AdmissiblePair::parse(const std::string& text) {
  AdmissiblePair ap;
  char sep = 0;
  std::string cleaned;
  for (char ch : text) {
    if (ch != '(' && ch != ')' && ch != ' ') cleaned.push_back(ch);
  }
  std::istringstream is(cleaned);
  if (!(is >> ap.pos >> sep >> ap.neg) || sep != ',' || ap.pos < 0 || ap.neg < 0) {
    throw Error(ErrorKind::Parse, "expected \"pos,neg\" but got \"" + text + "\"");
  }
  std::string rest;
  if (is >> rest) throw Error(ErrorKind::Parse, "trailing text in pair \"" + text + "\"");
  return ap;
}

std::string AdmissiblePair::to_string() const { return std::to_string(pos) + "," + std::to_string(neg); }

std::string Couple::to_string() const {
  std::string out = "((";
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (i) out += ",";
    out += to_char(sp[i]);
  }
  out += "),(" + ap.to_string() + "))";
  return out;
}

std::string Couple::key() const { return sp.to_string() + " " + ap.to_string(); }

DescartesPair descartes_pair(const SignPattern& sp) {
  const int c = sp.sign_changes();
  return {c, sp.degree() - c};
}

bool is_admissible(const SignPattern& sp, const AdmissiblePair& ap) {
  const auto [c, p] = descartes_pair(sp);
  return ap.pos >= 0 && ap.neg >= 0 && ap.pos <= c && ap.neg <= p && (c - ap.pos) % 2 == 0 &&
         (p - ap.neg) % 2 == 0;
}

std::vector<AdmissiblePair> admissible_pairs(const SignPattern& sp) {
  const auto [c, p] = descartes_pair(sp);
  std::vector<AdmissiblePair> out;
  out.reserve(static_cast<std::size_t>((c / 2 + 1) * (p / 2 + 1)));
  for (int pos = c; pos >= 0; pos -= 2) {
    for (int neg = p; neg >= 0; neg -= 2) out.push_back({pos, neg});
  }
  return out;
}

Couple make_couple(const SignPattern& sp, const AdmissiblePair& ap) {
  if (!is_admissible(sp, ap)) {
    throw Error(ErrorKind::InvalidArgument,
                "pair (" + ap.to_string() + ") is not admissible for " + sp.to_string());
  }
  return {sp, ap};
}

void for_each_sign_pattern(int d, LeadingSigns leading, const std::function<void(const SignPattern&)>& visit) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "degree must be at least 1");
  if (d > 30) throw Error(ErrorKind::InvalidArgument, "degree too large to enumerate");
  const int free_bits = leading == LeadingSigns::Both ? d + 1 : d;
  const std::uint64_t total = std::uint64_t{1} << free_bits;
  std::vector<Sign> signs(static_cast<std::size_t>(d) + 1, Sign::Plus);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // The most significant free bit maps to the earliest free position, so
    // counting upward walks the patterns in lexicographic order.
    const std::size_t first = leading == LeadingSigns::Both ? 0 : 1;
    for (std::size_t i = first; i < signs.size(); ++i) {
      const int bit = free_bits - 1 - static_cast<int>(i - first);
      signs[i] = ((mask >> bit) & 1U) ? Sign::Minus : Sign::Plus;
    }
    visit(SignPattern(signs));
  }
}

void for_each_couple(int d, LeadingSigns leading, const std::function<void(const Couple&)>& visit) {
  for_each_sign_pattern(d, leading, [&](const SignPattern& sp) {
    for (const auto& ap : admissible_pairs(sp)) visit(Couple{sp, ap});
  });
}

std::vector<Couple> enumerate_couples(int d, LeadingSigns leading) {
  std::vector<Couple> out;
  for_each_couple(d, leading, [&](const Couple& c) { out.push_back(c); });
  return out;
}

std::uint64_t couple_count_closed_form(int d, LeadingSigns leading) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(d, c)
  for (int c = 0; c <= d; ++c) {
    total += binom * static_cast<std::uint64_t>(c / 2 + 1) * static_cast<std::uint64_t>((d - c) / 2 + 1);
    binom = binom * static_cast<std::uint64_t>(d - c) / static_cast<std::uint64_t>(c + 1);
  }
  return leading == LeadingSigns::Both ? 2 * total : total;
}

Couple act_negate(const Couple& couple) {
  const SignPattern sp = couple.sp.normalized();
  std::vector<Sign> signs = sp.signs();
  // Position i carries exponent d - i; (-1)^d P(-x) multiplies it by (-1)^i.
  for (std::size_t i = 1; i < signs.size(); i += 2) signs[i] = flip(signs[i]);
  return {SignPattern(std::move(signs)), {couple.ap.neg, couple.ap.pos}};
}

Couple act_reverse(const Couple& couple) {
  std::vector<Sign> signs = couple.sp.signs();
  std::reverse(signs.begin(), signs.end());
  return {SignPattern(std::move(signs)).normalized(), couple.ap};
}

bool Orbit::contains(const Couple& c) const { return std::binary_search(members.begin(), members.end(), c); }

Orbit orbit_of(const Couple& couple) {
  const Couple base{couple.sp.normalized(), couple.ap};
  const Couple n = act_negate(base);
  std::vector<Couple> members{base, n, act_reverse(base), act_reverse(n)};
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Orbit orbit;
  orbit.canonical = members.front();
  orbit.members = std::move(members);
  return orbit;
}

std::vector<Orbit> enumerate_orbits(int d) {
  std::vector<Orbit> out;
  for_each_couple(d, LeadingSigns::PlusOnly, [&](const Couple& c) {
    Orbit orbit = orbit_of(c);
    if (orbit.canonical == c) out.push_back(std::move(orbit));
  });
  std::sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) { return a.canonical < b.canonical; });
  return out;
}

}  // namespace descartes
