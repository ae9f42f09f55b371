#include <doctest.h>

#include <set>

#include "descartes/realize.hpp"
#include "oracles.hpp"

using namespace descartes;
using oracle::poly;

namespace {

Couple C(const char* sp, int pos, int neg) { return make_couple(SignPattern::parse(sp), {pos, neg}); }
SignPattern S(const char* sp) { return SignPattern::parse(sp); }

}  // namespace

TEST_SUITE("realize") {
  TEST_CASE("Witness::verify checks everything itself") {
    CHECK(Witness::verify(poly({1, 1, -2}), C("++-", 1, 1)).has_value());
    CHECK_FALSE(Witness::verify(poly({1, 1, -2}), C("++-", 1, 1)) == std::nullopt);
    CHECK_FALSE(Witness::verify(poly({1, -1, -2}), C("++-", 1, 1)).has_value());  // wrong pattern
    CHECK_FALSE(Witness::verify(poly({1, 2, 1}), C("+++", 0, 0)).has_value());    // double root
    CHECK_FALSE(Witness::verify(poly({1, 0, -1}), C("++-", 1, 1)).has_value());   // vanishing coefficient
    CHECK_FALSE(Witness::verify(poly({1, 3, 2}), C("+++", 0, 0)).has_value());    // wrong counts
    const auto w = Witness::verify(poly({1, 1, -24, 36}), C("++-+", 2, 1));
    REQUIRE(w);
    CHECK(w->verified().pos == 2);
    CHECK(w->verified().neg == 1);
  }

  TEST_CASE("realize_minimal") {
    const Witness a = realize_minimal(S("+++"));
    CHECK(a.couple().ap == AdmissiblePair{0, 0});
    // x^2 + x + 3: negative discriminant
    CHECK(Witness::verify(poly({1, 1, 3}), C("+++", 0, 0)).has_value());
    const auto& p = a.polynomial();
    CHECK(p.coeff(1) * p.coeff(1) - 4 * p.coeff(2) * p.coeff(0) < 0);
    CHECK(realize_minimal(S("++-++")).couple().ap == AdmissiblePair{0, 0});
    CHECK(realize_minimal(S("++-")).couple().ap == AdmissiblePair{1, 1});
    CHECK(realize_minimal(S("+++-")).couple().ap == AdmissiblePair{1, 0});
    CHECK(realize_minimal(S("+--+")).couple().ap == AdmissiblePair{0, 1});
    CHECK(realize_minimal(S("+---+")).couple().ap == AdmissiblePair{0, 0});
  }

  TEST_CASE("concatenate") {
    Concatenation c = concatenate(poly({1, 1}), poly({1, -1}));
    const mpq_class e = c.epsilon;
    CHECK(e == mpq_class(1, 2));
    CHECK(c.polynomial == poly({1, 1 - e, -e}));
    CHECK(c.predicted_pattern == S("++-"));
    CHECK(c.predicted_pair == AdmissiblePair{1, 1});

    c = concatenate(poly({1, -1}), poly({1, 1}));
    CHECK(c.polynomial == poly({1, -1 + c.epsilon, -c.epsilon}));
    CHECK(c.predicted_pattern == S("+--"));
    CHECK(c.predicted_pair == AdmissiblePair{1, 1});

    // last sign of the first pattern +: the second pattern is appended as is
    c = concatenate(poly({1, 1}), poly({1, -2, 2}));
    CHECK(c.predicted_pattern == S("++-+"));
    CHECK(c.predicted_pair == AdmissiblePair{0, 1});
    CHECK(sign_pattern_of(c.polynomial) == S("++-+"));

    // last sign -: the second pattern is appended negated
    c = concatenate(poly({1, -1}), poly({1, -2, 2}));
    CHECK(c.predicted_pattern == S("+-+-"));
    CHECK(root_count(c.polynomial).pos == 1);

    CHECK_THROWS_AS(concatenate(poly({1, 1}), poly({1, -1}), 0), Error);
  }

  TEST_CASE("realize_hyperbolic") {
    CHECK(realize_hyperbolic(S("++-")).couple().ap == AdmissiblePair{1, 1});
    CHECK(realize_hyperbolic(S("+-+")).couple().ap == AdmissiblePair{2, 0});
    CHECK(realize_hyperbolic(S("++++")).couple().ap == AdmissiblePair{0, 3});
    CHECK(Witness::verify(poly({1, 6, 11, 6}), C("++++", 0, 3)).has_value());
    CHECK(realize_hyperbolic(S("-+-")).couple().ap == AdmissiblePair{2, 0});
    for (int d = 1; d <= 6; ++d) {
      for_each_sign_pattern(d, LeadingSigns::PlusOnly, [&](const SignPattern& sp) {
        const Witness w = realize_hyperbolic(sp);
        const auto [c, p] = descartes_pair(sp);
        CHECK(w.verified().pos == c);
        CHECK(w.verified().neg == p);
      });
    }
  }

  TEST_CASE("two-change shapes and kappa") {
    CHECK(two_change_shape(S("+-----+")) == TwoChangeShape{1, 5, 1});
    CHECK(two_change_shape(S("++-++")) == TwoChangeShape{2, 1, 2});
    CHECK_FALSE(two_change_shape(S("+++")).has_value());
    CHECK_FALSE(two_change_shape(S("+-+-")).has_value());
    CHECK(two_change_shape(S("-+++-")) == TwoChangeShape{1, 3, 1});

    auto direct = [](int m, int q, int d) {
      mpq_class r = mpq_class(d - m - 1) / m * (d - q - 1) / q;
      return r;
    };
    CHECK(kappa({1, 5, 1}, 6) == direct(1, 1, 6));
    CHECK(kappa({1, 5, 1}, 6) == 16);
    CHECK(kappa({2, 1, 2}, 4) == mpq_class(1, 4));
    CHECK(kappa({1, 7, 1}, 8) == 36);

    auto hit = kappa_criterion({1, 5, 1}, 6);
    REQUIRE(hit);
    CHECK(hit->couple == C("+-----+", 0, 4));
    CHECK_FALSE(kappa_criterion({2, 1, 2}, 4).has_value());
    hit = kappa_criterion({1, 7, 1}, 8);
    REQUIRE(hit);
    CHECK(hit->couple == C("+-------+", 0, 6));
    // the boundary value 4 itself fires
    CHECK(kappa({1, 3, 1}, 4) == 4);
    hit = kappa_criterion({1, 3, 1}, 4);
    REQUIRE(hit);
    CHECK(hit->couple == C("+---+", 0, 2));
    CHECK(kappa_criterion({2, 3, 2}, 6).has_value() == (direct(2, 2, 6) >= 4));
  }

  TEST_CASE("two_change_2v_realizable") {
    CHECK(two_change_2v_realizable({2, 1, 2}, 4, 0) == Verdict::Excluded);
    CHECK(two_change_2v_realizable({2, 1, 2}, 4, 2) == Verdict::Realizable);
    CHECK(two_change_2v_realizable({2, 1, 3}, 5, 1) == Verdict::Realizable);
    CHECK(two_change_2v_realizable({1, 1, 3}, 4, 0) == Verdict::Realizable);
  }

  TEST_CASE("ratio_criterion") {
    // The threshold only looks at d, pos and neg.
    CHECK(ratio_criterion(Couple{SignPattern::all_plus(7), {2, 2}}));
    CHECK_FALSE(ratio_criterion(C("++-----+", 0, 5)));
    CHECK(ratio_criterion(Couple{SignPattern::all_plus(10), {3, 3}}));
    CHECK_FALSE(ratio_criterion(Couple{SignPattern::all_plus(10), {2, 3}}));
    CHECK(ratio_criterion(C("++-+-", 1, 1)));
  }

  TEST_CASE("even series") {
    CHECK(even_series_status(S("++-++"), {2, 0}) == Verdict::Excluded);
    CHECK(even_series_status(S("++-++"), {0, 2}) == Verdict::Realizable);
    CHECK(even_series_status(S("++-+-++"), {4, 0}) == Verdict::Excluded);
    CHECK(even_series_status(S("++-+-++"), {2, 0}) == Verdict::Excluded);
    CHECK(even_series_status(S("++-+-++"), {0, 0}) == Verdict::Realizable);
    CHECK_FALSE(even_series_status(S("+---+"), {0, 2}).has_value());
    CHECK_FALSE(even_series_status(S("++-+"), {2, 1}).has_value());
  }

  TEST_CASE("odd series") {
    CHECK(odd_series_pattern(5, 1) == S("++-+--"));
    CHECK(odd_series_pattern(7, 2) == S("++-+-+--"));
    CHECK(odd_series_status(5, 1, {3, 0}) == Verdict::Excluded);
    CHECK(odd_series_status(5, 1, {1, 0}) == Verdict::Realizable);
    CHECK(odd_series_status(5, 1, {1, 2}) == Verdict::Realizable);
    CHECK(odd_series_status(7, 2, {5, 0}) == Verdict::Excluded);
    CHECK(odd_series_status(7, 2, {3, 0}) == Verdict::Excluded);
    CHECK(odd_series_status(7, 2, {5, 2}) == Verdict::Realizable);
    CHECK(odd_series_index(S("++-+--")) == 1);
    CHECK_FALSE(odd_series_index(S("++-+-+")).has_value());
    for (auto [d, k] : {std::pair{4, 1}, {5, 0}, {5, 2}, {3, 1}}) {
      try {
        odd_series_pattern(d, k);
        FAIL("expected BadSeriesParams");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadSeriesParams);
      }
    }
  }

  TEST_CASE("theorem tables") {
    const auto t4 = theorem_tables(4);
    REQUIRE(t4.size() == 2);
    CHECK(t4[0].couple == C("++-++", 2, 0));
    CHECK(t4[1].couple == C("+---+", 0, 2));
    CHECK(table_representatives(7).size() == 6);
    std::vector<int> sizes;
    for (const auto& e : table_representatives(7)) sizes.push_back(static_cast<int>(orbit_of(e.couple).size()));
    CHECK(sizes == std::vector<int>{4, 2, 4, 4, 2, 2});
    CHECK(table_representatives(8).size() == 19);
    const auto t11 = table_representatives(11);
    REQUIRE(t11.size() == 1);
    CHECK(t11[0].couple == C("+-----+++++-", 1, 8));
    CHECK(descartes_pair(t11[0].couple.sp) == DescartesPair{3, 8});
    const auto t9 = table_representatives(9);
    REQUIRE(t9.size() == 1);
    CHECK(t9[0].conjectured);
    CHECK(theorem_tables(3).empty());
    CHECK(theorem_tables(10).empty());
    CHECK(table_lookup(C("--+--", 2, 0)).has_value());  // leading - is normalized
  }

  TEST_CASE("classify") {
    auto r = classify(C("++-++", 2, 0));
    CHECK(r.status == Status::NonrealizableTheorem);
    CHECK(r.tag == "degree-4-table");
    r = classify(C("++-", 1, 1));
    CHECK(r.status == Status::Realizable);
    REQUIRE(r.witness);
    r = classify(C("+---+", 0, 0));
    CHECK(r.status == Status::Realizable);
    CHECK(r.provenance.rfind("minimal", 0) == 0);
    r = classify(C("-+++-", 0, 0));
    CHECK(r.status == Status::Realizable);
    CHECK(r.witness->polynomial().leading() < 0);
    r = classify(C("+----++++-", 1, 6));
    CHECK(r.status == Status::Conjectured);
    CHECK(to_string(Status::NonrealizableCriterion) == "NonrealizableCriterion");
    CHECK(status_from_string("Unknown") == Status::Unknown);
    CHECK_THROWS_AS(status_from_string("nope"), Error);
  }

  TEST_CASE("classify_degree d = 3, 4, 5") {
    auto run = [](int d) {
      std::vector<ClassificationRecord> out;
      classify_degree(d, {}, [&](const ClassificationRecord& r) { out.push_back(r); });
      return out;
    };
    for (const auto& r : run(3)) CHECK(r.status == Status::Realizable);
    std::set<Couple> bad4;
    for (const auto& r : run(4)) {
      if (r.status != Status::Realizable) bad4.insert(r.couple);
      else CHECK(reverify(r));
    }
    CHECK(bad4 == std::set<Couple>{C("++-++", 2, 0), C("+---+", 0, 2)});
    std::set<Couple> bad5;
    for (const auto& r : run(5)) {
      if (r.status != Status::Realizable) bad5.insert(r.couple);
    }
    CHECK(bad5 == std::set<Couple>{C("++-+--", 3, 0), C("+----+", 0, 3)});
  }

  TEST_CASE("orbit coherence and criteria/table consistency, d <= 6") {
    for (int d = 2; d <= 6; ++d) {
      Classifier cl;
      for_each_couple(d, LeadingSigns::PlusOnly, [&](const Couple& c) {
        const auto a = cl.classify(c);
        CHECK(a.status == cl.classify(act_negate(c)).status);
        CHECK(a.status == cl.classify(act_reverse(c)).status);
        if (criteria_exclusion(c)) CHECK(table_lookup(c).has_value());
        if (ratio_criterion(c)) CHECK(a.status == Status::Realizable);
      });
    }
  }

  TEST_CASE("search is deterministic") {
    ClassifyOptions opt;
    opt.budget = 4000;
    const Couple c = C("++-----+", 0, 3);
    const SearchResult a = random_search(c, opt);
    const SearchResult b = random_search(c, opt);
    CHECK(a.tried == b.tried);
    CHECK(a.witness.has_value() == b.witness.has_value());
    if (a.witness) CHECK(a.witness->polynomial() == b.witness->polynomial());
  }

  TEST_CASE("find_witness on a table couple stays empty") {
    ClassifyOptions opt;
    opt.budget = 5000;
    Classifier cl(opt);
    const auto r = cl.find_witness(C("++-++", 2, 0));
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.status == Status::Unknown);
    CHECK(r.candidates == 5000);
  }
}
