// Command-line front end. Exit codes: 0 ok, 1 falsification alarm, 2 usage,
// 3 store corruption, 4 certified non-realizable, 5 unknown.

#include <algorithm>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "descartes/catalog.hpp"
#include "descartes/chains.hpp"
#include "descartes/realize.hpp"

using namespace descartes;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFalsified = 1, kUsage = 2, kCorrupt = 3, kNonrealizable = 4, kUnknown = 5 };

constexpr int kMaxDegree = 20;

json couple_json(const Couple& c) { return json{{"sp", c.sp.to_string()}, {"pos", c.ap.pos}, {"neg", c.ap.neg}}; }

json orbit_json(const Orbit& orbit) {
  json members = json::array();
  for (const auto& m : orbit.members) members.push_back(m.to_string());
  return json{{"canonical", orbit.canonical.to_string()}, {"size", orbit.size()}, {"members", members}};
}

LeadingSigns leading(bool both) { return both ? LeadingSigns::Both : LeadingSigns::PlusOnly; }

void check_degree(int d) {
  if (d < 1 || d > kMaxDegree) {
    throw Error(ErrorKind::InvalidArgument, "degree must be in 1.." + std::to_string(kMaxDegree));
  }
}

ClassifyOptions options_from(std::uint64_t budget, std::uint64_t seed) {
  ClassifyOptions opts;
  opts.budget = budget;
  opts.seed = seed;
  return opts;
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  int d = 0;
  bool both = false;
  bool orbits = false;
  bool count_only = false;
  bool csv = false;
};

int run_enumerate(const EnumerateArgs& a) {
  check_degree(a.d);
  if (a.orbits) {
    const auto orbits = enumerate_orbits(a.d);
    if (a.count_only) {
      std::cout << orbits.size() << "\n";
      return kOk;
    }
    for (const auto& o : orbits) std::cout << orbit_json(o).dump() << "\n";
    return kOk;
  }
  std::uint64_t n = 0;
  if (a.csv && !a.count_only) std::cout << "sp,pos,neg\n";
  for_each_couple(a.d, leading(a.both), [&](const Couple& c) {
    ++n;
    if (a.count_only) return;
    if (a.csv) {
      std::cout << c.sp.to_string() << "," << c.ap.pos << "," << c.ap.neg << "\n";
    } else {
      std::cout << couple_json(c).dump() << "\n";
    }
  });
  if (a.count_only) std::cout << n << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

struct ClassifyArgs {
  int d = 0;
  bool both = false;
  std::uint64_t budget = 50000;
  std::uint64_t seed = 1;
  std::string store;
  bool json = false;
  bool csv = false;
  bool reverify = false;
};

int report_records(int d, const std::vector<ClassificationRecord>& records, bool as_json, bool as_csv) {
  if (as_csv) {
    std::cout << csv_header() << "\n";
    for (const auto& r : records) {
      if (r.couple.degree() == d) std::cout << csv_row(r) << "\n";
    }
    return kOk;
  }
  const ReportSummary summary = summarize(d, records);
  if (as_json) {
    std::cout << summary.to_json().dump() << "\n";
  } else {
    std::cout << summary.to_text();
  }
  return kOk;
}

int reverify_store(const CatalogStore& store) {
  const auto failed = store.reverify_all();
  for (const auto& c : failed) std::cerr << "reverify FAILED " << c.to_string() << "\n";
  std::cerr << "reverified " << store.records().size() - failed.size() << "/" << store.records().size() << "\n";
  return failed.empty() ? kOk : kCorrupt;
}

int run_classify(const ClassifyArgs& a) {
  check_degree(a.d);
  Classifier classifier(options_from(a.budget, a.seed));
  std::optional<CatalogStore> store;
  if (!a.store.empty()) store = CatalogStore::open(a.store, StoreMeta{a.budget, a.seed, kToolVersion});

  std::vector<ClassificationRecord> records;
  for_each_couple(a.d, leading(a.both), [&](const Couple& c) {
    if (store) {
      if (const auto* stored = store->find(c)) {
        records.push_back(*stored);
        return;
      }
    }
    ClassificationRecord rec = classifier.classify(c);
    if (store) store->append(rec);
    records.push_back(std::move(rec));
  });
  if (a.reverify && store) {
    if (int code = reverify_store(*store); code != kOk) return code;
  }
  return report_records(a.d, records, a.json, a.csv);
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::vector<int> degrees{4, 5, 6};
  std::uint64_t budget = 50000;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  bool full = false;
};

int run_verify_tables(const VerifyArgs& a) {
  bool falsified = false;
  bool incomplete = false;
  for (int d : a.degrees) {
    check_degree(d);
    Classifier classifier(options_from(a.budget, a.seed));
    const auto reps = table_representatives(d);
    std::cout << "degree " << d << ": " << reps.size() << " table orbit(s)\n";

    for (const auto& rep : reps) {
      const int size = static_cast<int>(orbit_of(rep.couple).size());
      const bool ok = size == rep.stated_orbit_size;
      std::cout << (ok ? "PASS" : "FAIL") << " orbit size " << rep.couple.to_string() << " stated "
                << rep.stated_orbit_size << " computed " << size << "\n";
      falsified |= !ok;
    }

    // Table couples: criteria coverage and search consistency.
    for (const auto& entry : theorem_tables(d)) {
      const auto hit = criteria_exclusion(entry.couple);
      const ClassificationRecord rec = classifier.find_witness(entry.couple);
      if (rec.witness) {
        falsified = true;
        std::cout << "FAIL WITNESS FOUND for table couple " << entry.couple.to_string() << ": "
                  << rec.witness->polynomial().to_string() << "\n";
        continue;
      }
      std::cout << "PASS " << entry.tag << " " << entry.couple.to_string() << " no witness in " << rec.candidates
                << " candidates" << (hit ? " [criterion " + hit->criterion + "]" : std::string()) << "\n";
    }

    if (d >= 9) continue;  // search-only beyond the complete tables

    std::vector<Couple> others;
    for_each_couple(d, LeadingSigns::PlusOnly, [&](const Couple& c) {
      if (!table_lookup(c)) others.push_back(c);
    });
    // Criteria must never exclude a couple the tables leave out.
    for (const auto& c : others) {
      if (auto hit = criteria_exclusion(c)) {
        falsified = true;
        std::cout << "FAIL criterion " << hit->criterion << " excludes non-table couple " << c.to_string() << "\n";
      }
    }
    const bool sweep = d <= 6 || a.full;
    if (!sweep && others.size() > a.samples) {
      std::vector<Couple> picked;
      std::mt19937_64 rng(a.seed);
      std::sample(others.begin(), others.end(), std::back_inserter(picked), a.samples, rng);
      others = std::move(picked);
    }
    std::size_t realized = 0;
    for (const auto& c : others) {
      const ClassificationRecord rec = classifier.classify(c);
      if (rec.status == Status::Realizable) {
        ++realized;
      } else {
        incomplete = true;
        std::cout << "FAIL no witness for non-table couple " << c.to_string() << " (" << to_string(rec.status) << ")\n";
      }
    }
    std::cout << (realized == others.size() ? "PASS " : "FAIL ") << realized << "/" << others.size()
              << (sweep ? " non-table couples" : " sampled non-table couples") << " realized\n";
  }
  if (falsified) {
    std::cout << "verify-tables: FALSIFICATION ALARM\n";
    return kFalsified;
  }
  std::cout << "verify-tables: " << (incomplete ? "INCOMPLETE" : "PASS") << "\n";
  return incomplete ? kUnknown : kOk;
}

// ---------------------------------------------------------------------------

struct SapArgs {
  int d = 0;
  bool all_plus = false;
  std::string sp;
  std::string ap;
  bool extend = false;
  bool count_only = false;
  bool check_growth = false;
  bool search = false;
  std::uint64_t budget = 50000;
  std::uint64_t seed = 1;
};

int run_sap(const SapArgs& a) {
  if (a.check_growth) {
    const int top = a.d > 0 ? a.d : 12;
    check_degree(top);
    bool ok = true;
    std::size_t prev = enumerate_saps(SignPattern::all_plus(1)).size();
    for (int d = 2; d <= top; ++d) {
      const std::size_t cur = enumerate_saps(SignPattern::all_plus(d)).size();
      const bool holds = d % 2 == 0 ? cur >= 2 * prev : 2 * cur >= 3 * prev;
      ok &= holds;
      std::cout << (holds ? "PASS" : "FAIL") << " A(" << d << ") = " << cur << (d % 2 == 0 ? " >= 2*" : " >= 3/2*")
                << prev << "\n";
      prev = cur;
    }
    return ok ? kOk : kFalsified;
  }

  std::vector<SAPRecord> saps;
  if (!a.ap.empty() || a.extend) {
    if (a.sp.empty() || a.ap.empty()) throw Error(ErrorKind::InvalidArgument, "--extend needs --sp and --ap");
    saps = extend_couple(make_couple(SignPattern::parse(a.sp), AdmissiblePair::parse(a.ap)));
  } else if (!a.sp.empty()) {
    saps = enumerate_saps(SignPattern::parse(a.sp));
  } else if (a.all_plus) {
    check_degree(a.d);
    saps = enumerate_saps(SignPattern::all_plus(a.d));
  } else {
    throw Error(ErrorKind::InvalidArgument, "give --all-plus -d N, --sp, or --sp with --ap");
  }
  bool all_found = true;
  if (!a.count_only) {
    for (const auto& s : saps) {
      json pairs = json::array();
      for (const auto& p : s.pairs) pairs.push_back(p.to_string());
      json line{{"sp", s.sp.to_string()}, {"pairs", pairs}};
      if (a.search) {
        const ChainSearch found = search_sap_witness(s, a.budget, a.seed);
        all_found &= found.polynomial.has_value();
        line["witness"] = found.polynomial ? json(found.polynomial->to_string()) : json(nullptr);
        line["candidates"] = found.tried;
      }
      std::cout << line.dump() << "\n";
    }
  }
  std::cout << saps.size() << "\n";
  return all_found ? kOk : kUnknown;
}

int run_dseq(int d, bool count_only, bool realize, std::uint64_t budget, std::uint64_t seed) {
  check_degree(d);
  const auto seqs = enumerate_dsequences(d);
  bool all_found = true;
  if (!count_only) {
    for (const auto& s : seqs) {
      if (!realize) {
        std::cout << s.to_string() << "\n";
        continue;
      }
      const ChainSearch found = realize_dsequence(s, budget, seed);
      all_found &= found.polynomial.has_value();
      std::cout << s.to_string() << " " << (found.polynomial ? found.polynomial->to_string() : "not found") << "\n";
    }
  }
  std::cout << seqs.size() << "\n";
  return all_found ? kOk : kUnknown;
}

// ---------------------------------------------------------------------------

struct WitnessArgs {
  std::string sp;
  std::string ap;
  std::uint64_t budget = 50000;
  std::uint64_t seed = 1;
  std::string store;
};

int run_witness(const WitnessArgs& a) {
  const Couple couple = make_couple(SignPattern::parse(a.sp), AdmissiblePair::parse(a.ap));
  std::optional<ClassificationRecord> rec;
  if (!a.store.empty()) {
    const CatalogStore store = CatalogStore::load(a.store);
    if (const auto* stored = store.find(couple)) rec = *stored;
  }
  if (!rec) rec = classify(couple, options_from(a.budget, a.seed));

  json out = couple_json(couple);
  out["status"] = to_string(rec->status);
  out["provenance"] = rec->provenance;
  if (!rec->tag.empty()) out["tag"] = rec->tag;
  if (rec->witness) {
    out["polynomial"] = rec->witness->polynomial().to_string();
    out["witness"] = witness_to_json(*rec->witness);
  } else {
    out["candidates"] = rec->candidates;
  }
  std::cout << out.dump() << "\n";
  switch (rec->status) {
    case Status::Realizable: return kOk;
    case Status::NonrealizableTheorem:
    case Status::NonrealizableCriterion: return kNonrealizable;
    case Status::Conjectured:
    case Status::Unknown: return kUnknown;
  }
  return kUnknown;
}

int run_report(int d, const std::string& path, bool as_json, bool as_csv, bool reverify_flag) {
  check_degree(d);
  const CatalogStore store = CatalogStore::load(path);
  if (reverify_flag) {
    if (int code = reverify_store(store); code != kOk) return code;
  }
  std::vector<ClassificationRecord> records;
  for (const auto& [c, r] : store.records()) records.push_back(r);
  return report_records(d, records, as_json, as_csv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realizability of sign patterns and admissible pairs (Descartes' rule of signs)"};
  app.require_subcommand(1);

  auto add_format = [](CLI::App* sub, bool& as_json, bool& as_csv) {
    auto* j = sub->add_flag("--json", as_json, "JSON output");
    auto* c = sub->add_flag("--csv", as_csv, "CSV output");
    j->excludes(c);
  };
  auto add_search = [](CLI::App* sub, std::uint64_t& budget, std::uint64_t& seed) {
    sub->add_option("--budget", budget, "random candidates per couple")->envname("DESC_BUDGET")->capture_default_str();
    sub->add_option("--seed", seed, "search seed")->envname("DESC_SEED")->capture_default_str();
  };

  EnumerateArgs en;
  bool en_json = false;
  auto* enumerate = app.add_subcommand("enumerate", "list couples or orbits of degree d");
  enumerate->add_option("-d,--degree", en.d, "degree")->required();
  enumerate->add_flag("--both,!--plus-only", en.both, "include leading sign - (default: + only)");
  enumerate->add_flag("--orbits", en.orbits, "list orbits instead of couples");
  enumerate->add_flag("--count-only", en.count_only, "print the count only");
  add_format(enumerate, en_json, en.csv);

  int orbits_d = 0;
  bool orbits_count = false;
  auto* orbits = app.add_subcommand("orbits", "list the orbits of degree d");
  orbits->add_option("-d,--degree", orbits_d, "degree")->required();
  orbits->add_flag("--count-only", orbits_count, "print the count only");

  ClassifyArgs cl;
  auto* cls = app.add_subcommand("classify", "classify every couple of degree d");
  cls->add_option("-d,--degree", cl.d, "degree")->required();
  cls->add_flag("--both,!--plus-only", cl.both, "include leading sign -");
  add_search(cls, cl.budget, cl.seed);
  cls->add_option("--store", cl.store, "JSONL store (resumable)");
  cls->add_flag("--reverify", cl.reverify, "re-verify every stored record afterwards");
  add_format(cls, cl.json, cl.csv);

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify-tables", "check the published tables for consistency");
  verify->add_option("-d,--degree", ve.degrees, "degrees (repeatable)")->capture_default_str();
  add_search(verify, ve.budget, ve.seed);
  verify->add_option("--samples", ve.samples, "sampled non-table couples for d = 7, 8")->capture_default_str();
  verify->add_flag("--full", ve.full, "sweep every non-table couple for d = 7, 8");

  SapArgs sa;
  auto* sap = app.add_subcommand("sap", "sequences of admissible pairs");
  sap->add_option("-d,--degree", sa.d, "degree");
  sap->add_flag("--all-plus", sa.all_plus, "use the all-plus pattern of degree d");
  sap->add_option("--sp", sa.sp, "sign pattern, e.g. ++-++");
  sap->add_option("--ap", sa.ap, "admissible pair at level 0, e.g. 0,2");
  sap->add_flag("--extend", sa.extend, "all SAPs extending the couple (--sp, --ap)");
  sap->add_flag("--count-only", sa.count_only, "print the count only");
  sap->add_flag("--check-growth", sa.check_growth, "check the growth inequalities of A(d) up to d (default 12)");
  sap->add_flag("--search", sa.search, "search a realizing polynomial for every listed SAP");
  add_search(sap, sa.budget, sa.seed);

  int dseq_d = 0;
  bool dseq_count = false;
  auto* dseq = app.add_subcommand("dseq", "D-sequences of degree d");
  dseq->add_option("-d,--degree", dseq_d, "degree")->required();
  dseq->add_flag("--count-only", dseq_count, "print the count only");
  bool dseq_realize = false;
  std::uint64_t dseq_budget = 50000;
  std::uint64_t dseq_seed = 1;
  dseq->add_flag("--realize", dseq_realize, "search a realizing polynomial for every sequence");
  add_search(dseq, dseq_budget, dseq_seed);

  WitnessArgs wi;
  auto* witness = app.add_subcommand("witness", "construct or retrieve a witness for one couple");
  witness->add_option("sp", wi.sp, "sign pattern, e.g. \"+,+,-\" or ++-")->required();
  witness->add_option("ap", wi.ap, "admissible pair, e.g. 1,1")->required();
  add_search(witness, wi.budget, wi.seed);
  witness->add_option("--store", wi.store, "look the couple up in this store first");
  bool wi_json = false;
  witness->add_flag("--json", wi_json, "JSON output (the default)");

  int rep_d = 0;
  std::string rep_store;
  bool rep_json = false;
  bool rep_csv = false;
  bool rep_reverify = false;
  auto* report = app.add_subcommand("report", "summarize or export a store");
  report->add_option("-d,--degree", rep_d, "degree")->required();
  report->add_option("--store", rep_store, "JSONL store")->required();
  report->add_flag("--reverify", rep_reverify, "re-verify every stored record");
  add_format(report, rep_json, rep_csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*enumerate) return run_enumerate(en);
    if (*orbits) {
      EnumerateArgs o;
      o.d = orbits_d;
      o.orbits = true;
      o.count_only = orbits_count;
      return run_enumerate(o);
    }
    if (*cls) return run_classify(cl);
    if (*verify) return run_verify_tables(ve);
    if (*sap) return run_sap(sa);
    if (*dseq) return run_dseq(dseq_d, dseq_count, dseq_realize, dseq_budget, dseq_seed);
    if (*witness) return run_witness(wi);
    if (*report) return run_report(rep_d, rep_store, rep_json, rep_csv, rep_reverify);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::StoreCorruption ? kCorrupt : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
