#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "descartes/realize.hpp"
#include "descartes/signcomb.hpp"
#include "oracles.hpp"

using namespace descartes;

namespace {

Couple C(const char* sp, int pos, int neg) { return make_couple(SignPattern::parse(sp), {pos, neg}); }

std::vector<AdmissiblePair> pairs(std::initializer_list<std::pair<int, int>> list) {
  std::vector<AdmissiblePair> out;
  for (auto [p, n] : list) out.push_back({p, n});
  return out;
}

}  // namespace

TEST_SUITE("signcomb") {
  TEST_CASE("parsing and printing") {
    CHECK(SignPattern::parse("(+, -, -)") == SignPattern::parse("+--"));
    CHECK(SignPattern::parse("+,-,+").to_string() == "+-+");
    CHECK_THROWS_AS(SignPattern::parse("+"), Error);
    CHECK_THROWS_AS(SignPattern::parse("+a-"), Error);
    CHECK(AdmissiblePair::parse("0,2") == AdmissiblePair{0, 2});
    CHECK_THROWS_AS(AdmissiblePair::parse("0;2"), Error);
    CHECK(C("+---+", 0, 2).to_string() == "((+,-,-,-,+),(0,2))");
    CHECK(C("+---+", 0, 2).key() == "+---+ 0,2");
    CHECK_THROWS_AS(C("+---+", 1, 2), Error);
  }

  TEST_CASE("descartes_pair") {
    CHECK(descartes_pair(SignPattern::parse("+---+")) == DescartesPair{2, 2});
    CHECK(descartes_pair(SignPattern::all_plus(6)) == DescartesPair{0, 6});
    CHECK(descartes_pair(SignPattern::parse("++-+--")) == DescartesPair{3, 2});
  }

  TEST_CASE("admissible_pairs") {
    CHECK(admissible_pairs(SignPattern::parse("+---+")) == pairs({{2, 2}, {2, 0}, {0, 2}, {0, 0}}));
    CHECK(admissible_pairs(SignPattern::parse("++")) == pairs({{0, 1}}));
    CHECK(admissible_pairs(SignPattern::parse("++-+--")) == pairs({{3, 2}, {3, 0}, {1, 2}, {1, 0}}));
  }

  TEST_CASE("count identity against a grid scan, d <= 10") {
    for (int d = 1; d <= 10; ++d) {
      for_each_sign_pattern(d, LeadingSigns::PlusOnly, [&](const SignPattern& sp) {
        const auto expected = oracle::admissible(sp.to_string());
        const auto got = admissible_pairs(sp);
        REQUIRE(got.size() == expected.size());
        const auto [c, p] = descartes_pair(sp);
        CHECK(got.size() == static_cast<std::size_t>((c / 2 + 1) * (p / 2 + 1)));
        for (const auto& ap : got) {
          CHECK((c - ap.pos) % 2 == 0);
          CHECK((p - ap.neg) % 2 == 0);
        }
      });
    }
  }

  TEST_CASE("enumerate_couples counts") {
    CHECK(enumerate_couples(7, LeadingSigns::Both).size() == 1472);
    CHECK(enumerate_couples(8, LeadingSigns::Both).size() == 3648);
    CHECK(enumerate_couples(1, LeadingSigns::Both).size() == 4);
    for (int d = 1; d <= 10; ++d) {
      CHECK(enumerate_couples(d, LeadingSigns::Both).size() == oracle::brute_force_couples(d, true));
      CHECK(couple_count_closed_form(d, LeadingSigns::Both) == oracle::brute_force_couples(d, true));
      CHECK(couple_count_closed_form(d, LeadingSigns::PlusOnly) == oracle::brute_force_couples(d, false));
    }
    CHECK(enumerate_couples(2, LeadingSigns::Both).size() == 12);
  }

  TEST_CASE("enumeration order") {
    const auto all = enumerate_couples(3, LeadingSigns::PlusOnly);
    for (std::size_t i = 1; i < all.size(); ++i) {
      const auto& a = all[i - 1];
      const auto& b = all[i];
      if (a.sp == b.sp) CHECK(b.ap < a.ap);
      else CHECK(a.sp < b.sp);
    }
  }

  TEST_CASE("act_negate and act_reverse") {
    CHECK(act_negate(C("++-++", 2, 0)) == C("+---+", 0, 2));
    CHECK(act_negate(C("++", 0, 1)) == C("+-", 1, 0));
    CHECK(act_negate(C("++-+--", 3, 0)) == C("+----+", 0, 3));
    CHECK(act_reverse(C("+---+", 0, 2)) == C("+---+", 0, 2));
    CHECK(act_reverse(C("++-", 1, 1)) == C("+--", 1, 1));
    CHECK(act_reverse(C("++-+++", 2, 1)) == C("+++-++", 2, 1));
  }

  TEST_CASE("group law") {
    for (int d = 1; d <= 7; ++d) {
      for_each_couple(d, LeadingSigns::PlusOnly, [&](const Couple& c) {
        CHECK(act_negate(act_negate(c)) == c);
        CHECK(act_reverse(act_reverse(c)) == c);
        CHECK(act_negate(act_reverse(c)) == act_reverse(act_negate(c)));
      });
    }
  }

  TEST_CASE("orbit_of") {
    CHECK(orbit_of(C("+---+", 0, 2)).size() == 2);
    CHECK(orbit_of(C("+++-", 1, 2)).size() == 4);
    CHECK(orbit_of(C("+----+", 0, 3)).size() == 2);
    const Orbit o = orbit_of(C("+---+", 0, 2));
    CHECK(o.contains(C("++-++", 2, 0)));
    CHECK(o.canonical == C("++-++", 2, 0));
  }

  TEST_CASE("enumerate_orbits: small degrees by brute force") {
    const auto d1 = enumerate_orbits(1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].members == std::vector<Couple>{C("++", 0, 1), C("+-", 1, 0)});

    // d = 2: orbits recomputed from polynomial-level transforms of witnesses.
    std::map<Couple, std::set<Couple>> closure;
    for (const auto& c : enumerate_couples(2, LeadingSigns::PlusOnly)) {
      const auto rec = classify(c);
      REQUIRE(rec.witness);
      const auto& p = rec.witness->polynomial();
      auto image = [](const RationalPolynomial& q) {
        const RootCount rc = root_count(q);
        return make_couple(sign_pattern_of(q).normalized(), {rc.pos, rc.neg});
      };
      closure[c] = {c, image(negate_transform(p)), image(reciprocal_transform(p)),
                    image(reciprocal_transform(negate_transform(p)))};
    }
    std::set<std::vector<Couple>> expected;
    for (const auto& [c, members] : closure) expected.insert(std::vector<Couple>(members.begin(), members.end()));
    std::set<std::vector<Couple>> got;
    for (const auto& o : enumerate_orbits(2)) got.insert(o.members);
    CHECK(got == expected);
  }

  TEST_CASE("orbit partition and size characterization, d <= 8") {
    for (int d = 1; d <= 8; ++d) {
      std::size_t covered = 0;
      std::set<Couple> seen;
      for (const auto& o : enumerate_orbits(d)) {
        CHECK((o.size() == 2 || o.size() == 4));
        CHECK(o.canonical == o.members.front());
        for (const auto& m : o.members) CHECK(seen.insert(m).second);
        covered += o.size();
        const Couple& c = o.canonical;
        const bool small = act_reverse(c) == c || act_reverse(c) == act_negate(c);
        CHECK(small == (o.size() == 2));
      }
      CHECK(covered == enumerate_couples(d, LeadingSigns::PlusOnly).size());
      CHECK(2 * covered == enumerate_couples(d, LeadingSigns::Both).size());
    }
  }
}
