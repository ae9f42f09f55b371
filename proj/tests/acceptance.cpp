// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "descartes/catalog.hpp"
#include "descartes/chains.hpp"
#include "oracles.hpp"

using namespace descartes;

namespace {

SignPattern S(const char* sp) { return SignPattern::parse(sp); }
Couple C(const char* sp, int pos, int neg) { return make_couple(S(sp), {pos, neg}); }

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    out.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  std::printf("%s %2d %-34s %8.2fs%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              out.ok ? "" : "  ", out.note.str().c_str());
  std::fflush(stdout);
  if (!out.ok) ++failures;
}

std::string run_command(const std::string& cmd) {
  std::string text;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return text;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) text += buf;
  ::pclose(pipe);
  return text;
}

std::vector<ClassificationRecord> sweep(int d) {
  std::vector<ClassificationRecord> out;
  classify_degree(d, {}, [&](const ClassificationRecord& r) { out.push_back(r); });
  return out;
}

// Every non-realizable record must be a table entry, every other record a
// witness that verifies again from its coefficients.
void check_sweep(Outcome& out, const std::vector<ClassificationRecord>& recs, const std::set<Couple>& expected) {
  std::set<Couple> excluded;
  for (const auto& r : recs) {
    if (r.status == Status::Realizable) {
      out.require(r.witness && Witness::verify(r.witness->polynomial(), r.couple).has_value(),
                  "unverified witness for " + r.couple.to_string());
    } else {
      excluded.insert(r.couple);
    }
  }
  out.require(excluded == expected, "non-realizable set differs from the table");
}

std::vector<int> stated_sizes(int d) {
  std::vector<int> out;
  for (const auto& e : table_representatives(d)) {
    out.push_back(e.stated_orbit_size);
  }
  return out;
}

std::vector<int> computed_sizes(int d) {
  std::vector<int> out;
  for (const auto& e : table_representatives(d)) out.push_back(static_cast<int>(orbit_of(e.couple).size()));
  return out;
}

}  // namespace

int main() {
  criterion(1, "enumeration counts", 2.0, [](Outcome& out) {
    out.require(enumerate_couples(7, LeadingSigns::Both).size() == 1472, "d=7 count");
    out.require(enumerate_couples(8, LeadingSigns::Both).size() == 3648, "d=8 count");
#ifdef DESCARTES_CLI
    for (auto [d, want] : {std::pair{7, "1472"}, std::pair{8, "3648"}}) {
      const std::string got =
          run_command(std::string(DESCARTES_CLI) + " enumerate -d " + std::to_string(d) + " --both --count-only");
      out.require(got == std::string(want) + "\n", "CLI printed '" + got + "' for d=" + std::to_string(d));
    }
#endif
  });

  criterion(2, "d=4 classification", 60.0, [](Outcome& out) {
    check_sweep(out, sweep(4), {C("+---+", 0, 2), C("++-++", 2, 0)});
    Classifier search;
    for (const auto& c : {C("+---+", 0, 2), C("++-++", 2, 0)}) {
      out.require(search.find_witness(c).status != Status::Realizable, "witness found for " + c.to_string());
    }
  });

  criterion(3, "d=5 and d=6 classification", 1800.0, [](Outcome& out) {
    for (int d : {5, 6}) {
      std::set<Couple> expected;
      for (const auto& e : theorem_tables(d)) expected.insert(e.couple);
      check_sweep(out, sweep(d), expected);
    }
    std::vector<int> sizes = stated_sizes(5);
    for (int s : stated_sizes(6)) sizes.push_back(s);
    out.require(sizes == std::vector<int>{2, 2, 2, 4, 4}, "stated orbit sizes");
    std::vector<int> computed = computed_sizes(5);
    for (int s : computed_sizes(6)) computed.push_back(s);
    out.require(computed == sizes, "computed orbit sizes");
    Classifier search;
    for (int d : {5, 6}) {
      for (const auto& e : theorem_tables(d)) {
        out.require(search.find_witness(e.couple).status != Status::Realizable,
                    "witness found for " + e.couple.to_string());
      }
    }
  });

  criterion(4, "d=7 and d=8 spot checks", 0, [](Outcome& out) {
    out.require(table_representatives(7).size() == 6, "d=7 table size");
    out.require(table_representatives(8).size() == 19, "d=8 table size");
    out.require(stated_sizes(7) == std::vector<int>{4, 2, 4, 4, 2, 2}, "d=7 orbit sizes");
    out.require(stated_sizes(8) == std::vector<int>{2, 4, 4, 4, 2, 4, 4, 4, 2, 2, 2, 2, 2, 4, 4, 4, 4, 4, 4},
                "d=8 orbit sizes");
    out.require(computed_sizes(7) == stated_sizes(7) && computed_sizes(8) == stated_sizes(8),
                "computed orbit sizes");
    Classifier classifier;
    std::mt19937_64 rng(1);
    for (int d : {7, 8}) {
      for (const auto& e : table_representatives(d)) {
        out.require(classifier.find_witness(e.couple).status != Status::Realizable,
                    "witness found for " + e.couple.to_string());
      }
      std::vector<Couple> pool;
      for (const auto& c : enumerate_couples(d, LeadingSigns::Both)) {
        if (!table_lookup(c)) pool.push_back(c);
      }
      std::vector<Couple> picked;
      std::sample(pool.begin(), pool.end(), std::back_inserter(picked), 200, rng);
      out.require(picked.size() == 200, "sample size");
      for (const auto& c : picked) {
        const auto r = classifier.classify(c);
        out.require(r.status == Status::Realizable && r.witness &&
                        Witness::verify(r.witness->polynomial(), c).has_value(),
                    "no witness for " + c.to_string());
      }
    }
  });

  criterion(5, "hyperbolic realization, d <= 10", 300.0, [](Outcome& out) {
    for (int d = 1; d <= 10; ++d) {
      for_each_sign_pattern(d, LeadingSigns::PlusOnly, [&](const SignPattern& sp) {
        const Witness w = realize_hyperbolic(sp);
        const auto [c, p] = descartes_pair(sp);
        const RootCount rc = root_count(w.polynomial());
        out.require(sign_pattern_of(w.polynomial()) == sp && rc.pos == c && rc.neg == p,
                    "bad witness for " + sp.to_string());
      });
    }
  });

  criterion(6, "SAP counts and growth", 10.0, [](Outcome& out) {
    const std::vector<std::size_t> published{2, 3, 7, 12, 30, 55, 143, 273, 728};
    std::vector<std::size_t> a(13, 0);
    for (int d = 1; d <= 12; ++d) a[static_cast<std::size_t>(d)] = enumerate_saps(SignPattern::all_plus(d)).size();
    for (int d = 2; d <= 10; ++d) {
      out.require(a[static_cast<std::size_t>(d)] == published[static_cast<std::size_t>(d - 2)],
                  "count at d=" + std::to_string(d));
    }
    for (int d = 2; d <= 12; ++d) {
      const auto now = a[static_cast<std::size_t>(d)];
      const auto prev = a[static_cast<std::size_t>(d - 1)];
      const bool grows = d % 2 == 0 ? now >= 2 * prev : 2 * now >= 3 * prev;
      out.require(grows, "growth at d=" + std::to_string(d));
    }
  });

  criterion(7, "unique full SAP, d <= 9", 0, [](Outcome& out) {
    for (int d = 1; d <= 9; ++d) {
      for_each_sign_pattern(d, LeadingSigns::PlusOnly, [&](const SignPattern& sp) {
        int full = 0;
        for (const auto& s : enumerate_saps(sp)) full += s.pairs.front().pos + s.pairs.front().neg == d;
        const SAPRecord u = unique_full_sap(sp);
        const auto [c, p] = descartes_pair(sp);
        out.require(full == 1 && u.pairs.front() == AdmissiblePair{c, p}, "full SAP of " + sp.to_string());
      });
    }
  });

  criterion(8, "SAP tables", 0, [](Outcome& out) {
    auto seq = [](std::initializer_list<std::pair<int, int>> l) {
      std::vector<AdmissiblePair> v;
      for (auto [p, n] : l) v.push_back({p, n});
      return v;
    };
    std::set<std::vector<AdmissiblePair>> got;
    for (const auto& s : extend_couple(C("++-++", 0, 2))) got.insert(s.pairs);
    out.require(got == std::set<std::vector<AdmissiblePair>>{seq({{0, 2}, {2, 1}, {1, 1}, {0, 1}}),
                                                            seq({{0, 2}, {0, 1}, {1, 1}, {0, 1}})},
                "two extensions of ((+,+,-,+,+),(0,2))");
    const auto b = extend_couple(C("++-++", 2, 0));
    out.require(b.size() == 1 && b[0].pairs == seq({{2, 0}, {2, 1}, {1, 1}, {0, 1}}), "unique extension");
    for (int d = 1; d <= 3; ++d) out.require(known_nonrealizable_saps(d).records.empty(), "d<=3 not empty");
    const auto k4 = known_nonrealizable_saps(4).records;
    out.require(k4.size() == 1 && k4[0].first.sp == S("++-++") && k4[0].first.pairs == b[0].pairs, "d=4 record");
    const std::vector<SAPRecord> c5{{S("++-+++"), seq({{2, 1}, {2, 0}, {2, 1}, {1, 1}, {0, 1}})},
                                    {S("++-+++"), seq({{0, 1}, {2, 0}, {2, 1}, {1, 1}, {0, 1}})},
                                    {S("++-++-"), seq({{3, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}})},
                                    {S("++-++-"), seq({{1, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}})},
                                    {S("++-+--"), seq({{3, 0}, {3, 1}, {2, 1}, {1, 1}, {0, 1}})}};
    const auto k5 = known_nonrealizable_saps(5).records;
    std::vector<SAPRecord> got5;
    for (const auto& [rec, tag] : k5) got5.push_back(rec);
    out.require(got5 == c5, "d=5 records");
  });

  criterion(9, "D-sequences", 0, [](Outcome& out) {
    auto ds = [](std::initializer_list<std::pair<int, int>> l) { return DSequence{{l}}; };
    const auto d2 = enumerate_dsequences(2);
    const auto d3 = enumerate_dsequences(3);
    out.require(std::set<DSequence>(d2.begin(), d2.end()) == std::set<DSequence>{ds({{2, 0}, {1, 0}}), ds({{0, 2}, {1, 0}})},
                "d=2 list");
    out.require(std::set<DSequence>(d3.begin(), d3.end()) ==
                    std::set<DSequence>{ds({{3, 0}, {2, 0}, {1, 0}}), ds({{1, 2}, {0, 2}, {1, 0}}),
                                        ds({{1, 2}, {2, 0}, {1, 0}})},
                "d=3 list");
    out.require(d2.size() == 2 && d3.size() == 3, "no duplicates");
    out.require(dsequence_of(oracle::poly({1, 0, -1, 0})) == ds({{3, 0}, {2, 0}, {1, 0}}), "x^3 - x");
    out.require(dsequence_of(oracle::poly({1, 0, 1, 0})) == ds({{1, 2}, {0, 2}, {1, 0}}), "x^3 + x");
    out.require(dsequence_of(oracle::poly({1, 3, -8, 10})) == ds({{1, 2}, {2, 0}, {1, 0}}), "x^3 + 3x^2 - 8x + 10");

    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> deg(1, 8);
    for (int i = 0; i < 10000; ++i) {
      const auto p = i % 2 ? oracle::random_integer_poly(rng, deg(rng), 10, false) : oracle::random_factored(rng, 8).polynomial;
      if (p.degree() < 1) continue;
      const int d = p.degree();
      const DSequence s = dsequence_of(p);
      bool good = s.degree() == d;
      RationalPolynomial q = p;
      for (int j = 0; good && j < d; ++j) {
        const auto [r, twice_c] = s.entries[static_cast<std::size_t>(j)];
        good = r + twice_c == d - j && twice_c % 2 == 0 && r >= 0 && twice_c >= 0;
        if (j + 1 < d) good = good && r <= s.entries[static_cast<std::size_t>(j + 1)].first + 1;
        // real roots with multiplicity through the squarefree factors
        int real = 0;
        const auto parts = squarefree_decomposition(q);
        for (std::size_t m = 0; m < parts.size(); ++m) {
          if (parts[m].degree() >= 1) {
            real += static_cast<int>(m + 1) * sturm_count(parts[m], Bound::neg_infinity(), Bound::pos_infinity());
          }
        }
        good = good && real == r;
        q = derivative(q);
      }
      out.require(good, "D-sequence conditions violated by a random polynomial of degree " + std::to_string(d));
    }
  });

  criterion(10, "Rolle property suite", 0, [](Outcome& out) {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> deg(1, 8);
    int accepted = 0;
    while (accepted < 10000) {
      const auto p = oracle::random_integer_poly(rng, deg(rng), 20, true);
      const SapProfile prof = sap_profile_of(p);
      if (!prof.all_simple) continue;
      ++accepted;
      const int d = p.degree();
      const auto& v = prof.record.pairs;
      bool good = static_cast<int>(v.size()) == d;
      RationalPolynomial q = p.leading() < 0 ? -p : p;
      for (int k = 0; good && k < d; ++k) {
        const RootCount rc = root_count(q);
        good = rc.pos == v[static_cast<std::size_t>(k)].pos && rc.neg == v[static_cast<std::size_t>(k)].neg;
        if (k + 1 < d) {
          const auto& a = v[static_cast<std::size_t>(k)];
          const auto& b = v[static_cast<std::size_t>(k + 1)];
          good = good && b.pos >= a.pos - 1 && b.neg >= a.neg - 1 && b.pos + b.neg >= a.pos + a.neg - 1 &&
                 (b.pos + b.neg + 3 - a.pos - a.neg) % 2 == 0;
        }
        q = derivative(q);
      }
      out.require(good, "violation on a polynomial of degree " + std::to_string(d));
    }
  });

  criterion(11, "criteria consistency", 0, [](Outcome& out) {
    for (int d = 4; d <= 8; ++d) {
      for_each_couple(d, LeadingSigns::Both, [&](const Couple& c) {
        if (criteria_exclusion(c)) {
          const auto entry = table_lookup(c);
          out.require(entry && !entry->conjectured, "criterion excludes non-table couple " + c.to_string());
        }
      });
    }
    Classifier classifier;
    int guaranteed = 0;
    for (int d = 1; d <= 7; ++d) {
      for_each_couple(d, LeadingSigns::Both, [&](const Couple& c) {
        if (!ratio_criterion(c)) return;
        ++guaranteed;
        const auto r = classifier.classify(c);
        out.require(r.status == Status::Realizable && r.witness, "no witness for guaranteed " + c.to_string());
      });
    }
    out.require(guaranteed > 0, "no guaranteed couples checked");
  });

  criterion(12, "S and T families", 0, [](Outcome& out) {
    using F = Lemma2Family;
    const std::vector<std::pair<F, const char*>> published{{F::S, "++++-+"}, {F::S, "+++--+"}, {F::S, "++---+"},
                                                       {F::S, "++--++"}, {F::T, "++-++-"}, {F::T, "++--+-"},
                                                       {F::T, "+++-+-"}};
    const auto rows = lemma2_table();
    out.require(rows.size() == published.size(), "seven rows");
    const mpq_class width(1, 1 << 20);
    for (std::size_t i = 0; i < rows.size() && i < published.size(); ++i) {
      const auto& row = rows[i];
      out.require(row.family == published[i].first && row.sp == S(published[i].second), "row " + std::to_string(i));
      const mpq_class lo = bracket(row.lower, width).second;
      std::vector<mpq_class> samples;
      if (row.upper.infinite) {
        samples = {lo + 1, lo + 10, lo * 1000 + 1};
      } else {
        const mpq_class hi = bracket(row.upper, width).first;
        out.require(lo < hi, "empty interval");
        for (int k = 1; k <= 3; ++k) samples.push_back(lo + (hi - lo) * k / 4);
      }
      for (const auto& a : samples) {
        out.require(lemma2_sign_pattern(row.family, a) == row.sp, "row " + std::to_string(i) + " at a=" + a.get_str());
      }
    }
  });

  criterion(13, "transform laws", 0, [](Outcome& out) {
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 10000) {
      const oracle::Factored f = oracle::random_factored(rng, 8);
      if (f.zero_root) continue;
      ++done;
      const auto& p = f.polynomial;
      const RootCount n = root_count(negate_transform(p));
      const RootCount r = root_count(reciprocal_transform(p));
      out.require(negate_transform(negate_transform(p)) == p, "negate is not an involution");
      out.require(reciprocal_transform(reciprocal_transform(p)) == p.monic(), "reciprocal is not an involution");
      out.require(n.pos == f.neg && n.neg == f.pos, "negate does not swap pos and neg");
      out.require(r.pos == f.pos && r.neg == f.neg, "reciprocal changes pos or neg");
    }
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
