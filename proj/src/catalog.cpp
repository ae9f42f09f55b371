#include "descartes/catalog.hpp"

#include <zlib.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace descartes {

using nlohmann::json;

namespace {

Couple couple_from_json(const json& object) {
  return make_couple(SignPattern::parse(object.at("sp").get<std::string>()),
                     {object.at("pos").get<int>(), object.at("neg").get<int>()});
}

json meta_to_json(const StoreMeta& meta) {
  return json{{"kind", "meta"}, {"budget", meta.budget}, {"seed", meta.seed}, {"version", meta.version}};
}

StoreMeta meta_from_json(const json& object) {
  if (object.value("kind", "") != "meta") throw Error(ErrorKind::StoreCorruption, "first line is not a meta record");
  StoreMeta meta;
  meta.budget = object.at("budget").get<std::uint64_t>();
  meta.seed = object.at("seed").get<std::uint64_t>();
  meta.version = object.at("version").get<std::string>();
  return meta;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

json witness_to_json(const Witness& witness) {
  json coeffs = json::array();
  for (const auto& c : witness.polynomial().coeffs()) coeffs.push_back(rational_to_string(c));
  return json{{"coefficients", coeffs}, {"pos", witness.verified().pos}, {"neg", witness.verified().neg}};
}

json record_to_json(const ClassificationRecord& record) {
  json out{{"kind", "record"},
           {"sp", record.couple.sp.to_string()},
           {"pos", record.couple.ap.pos},
           {"neg", record.couple.ap.neg},
           {"status", to_string(record.status)},
           {"tag", record.tag},
           {"provenance", record.provenance},
           {"candidates", record.candidates}};
  out["witness"] = record.witness ? witness_to_json(*record.witness) : json(nullptr);
  return out;
}

ClassificationRecord record_from_json(const json& object) {
  try {
    ClassificationRecord rec;
    rec.couple = couple_from_json(object);
    rec.status = status_from_string(object.at("status").get<std::string>());
    rec.tag = object.at("tag").get<std::string>();
    rec.provenance = object.at("provenance").get<std::string>();
    rec.candidates = object.at("candidates").get<std::uint64_t>();
    const json& w = object.at("witness");
    if (!w.is_null()) {
      std::vector<mpq_class> coeffs;
      for (const auto& c : w.at("coefficients")) coeffs.push_back(rational_from_string(c.get<std::string>()));
      rec.witness = Witness::verify(RationalPolynomial(std::move(coeffs)), rec.couple);
      if (!rec.witness) {
        throw Error(ErrorKind::StoreCorruption, "stored witness for " + rec.couple.to_string() + " does not verify");
      }
    }
    return rec;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed record: ") + e.what());
  }
}

std::string checksum_of(const std::string& payload) {
  const uLong crc = crc32(0L, reinterpret_cast<const Bytef*>(payload.data()), static_cast<uInt>(payload.size()));
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08lx", static_cast<unsigned long>(crc));
  return buf;
}

std::string encode_line(json object) {
  object.erase("crc");
  const std::string crc = checksum_of(object.dump());
  object["crc"] = crc;
  return object.dump();
}

json decode_line(const std::string& line) {
  json object;
  try {
    object = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::StoreCorruption, std::string("unparsable line: ") + e.what());
  }
  if (!object.is_object() || !object.contains("crc") || !object["crc"].is_string()) {
    throw Error(ErrorKind::StoreCorruption, "line without checksum");
  }
  const std::string stored = object["crc"].get<std::string>();
  object.erase("crc");
  if (checksum_of(object.dump()) != stored) throw Error(ErrorKind::StoreCorruption, "checksum mismatch");
  return object;
}

CatalogStore CatalogStore::open(const std::filesystem::path& path, const StoreMeta& meta) {
  CatalogStore store(path, meta, true);
  if (std::filesystem::exists(path) && std::filesystem::file_size(path) > 0) {
    store.read_existing(true);
    if (store.meta_.budget != meta.budget || store.meta_.seed != meta.seed) {
      throw Error(ErrorKind::InvalidArgument, "store " + path.string() + " was written with budget " +
                                                  std::to_string(store.meta_.budget) + " and seed " +
                                                  std::to_string(store.meta_.seed));
    }
  } else {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
    out << encode_line(meta_to_json(meta)) << '\n';
  }
  return store;
}

CatalogStore CatalogStore::load(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw Error(ErrorKind::InvalidArgument, "no store at " + path.string());
  CatalogStore store(path, {}, false);
  store.read_existing(false);
  return store;
}

void CatalogStore::read_existing(bool repair) {
  std::ifstream in(path_, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::size_t begin = 0;
  std::size_t line_no = 0;
  while (begin < text.size()) {
    const std::size_t end = text.find('\n', begin);
    if (end == std::string::npos) {
      // An append interrupted mid-line; the record is recomputed on resume.
      if (repair) std::filesystem::resize_file(path_, begin);
      break;
    }
    const std::string line = text.substr(begin, end - begin);
    ++line_no;
    try {
      const json object = decode_line(line);
      if (line_no == 1) {
        meta_ = meta_from_json(object);
      } else {
        ClassificationRecord rec = record_from_json(object);
        if (!records_.emplace(rec.couple, rec).second) {
          throw Error(ErrorKind::StoreCorruption, "duplicate key " + rec.couple.key());
        }
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::StoreCorruption || e.kind() == ErrorKind::Parse ||
          e.kind() == ErrorKind::InvalidArgument) {
        throw Error(ErrorKind::StoreCorruption, path_.string() + ":" + std::to_string(line_no) + ": " + e.what());
      }
      throw;
    }
    begin = end + 1;
  }
  if (line_no == 0) throw Error(ErrorKind::StoreCorruption, path_.string() + ": missing meta line");
}

const ClassificationRecord* CatalogStore::find(const Couple& couple) const {
  const auto it = records_.find(couple);
  return it == records_.end() ? nullptr : &it->second;
}

void CatalogStore::append(const ClassificationRecord& record) {
  if (!writable_) throw Error(ErrorKind::InvalidArgument, "store opened read-only");
  if (contains(record.couple)) throw Error(ErrorKind::InvalidArgument, "duplicate key " + record.couple.key());
  if (record.status == Status::Realizable && !record.witness) {
    throw Error(ErrorKind::InvalidArgument, "realizable record without witness");
  }
  std::ofstream out(path_, std::ios::app);
  out << encode_line(record_to_json(record)) << '\n';
  out.flush();
  if (!out) throw Error(ErrorKind::InvalidArgument, "write to " + path_.string() + " failed");
  records_.emplace(record.couple, record);
}

std::vector<Couple> CatalogStore::reverify_all() const {
  std::vector<Couple> failed;
  for (const auto& [couple, rec] : records_) {
    if (!reverify(rec)) failed.push_back(couple);
  }
  return failed;
}

double ReportSummary::realizable_ratio() const {
  return total_couples == 0 ? 0.0 : static_cast<double>(realizable) / static_cast<double>(total_couples);
}

json ReportSummary::to_json() const {
  return json{{"degree", degree},
              {"total_couples", total_couples},
              {"realizable", realizable},
              {"nonrealizable_theorem", nonrealizable_theorem},
              {"nonrealizable_criterion", nonrealizable_criterion},
              {"conjectured", conjectured},
              {"unknown", unknown},
              {"orbit_counts", orbit_counts},
              {"R", realizable},
              {"A", total_couples},
              {"ratio", realizable_ratio()}};
}

std::string ReportSummary::to_text() const {
  std::ostringstream out;
  out << "degree " << degree << "\n"
      << "  total couples            " << total_couples << "\n"
      << "  realizable               " << realizable << "\n"
      << "  nonrealizable (table)    " << nonrealizable_theorem << "\n"
      << "  nonrealizable (criteria) " << nonrealizable_criterion << "\n"
      << "  conjectured              " << conjectured << "\n"
      << "  unknown                  " << unknown << "\n";
  for (const auto& [status, n] : orbit_counts) out << "  orbits " << status << ": " << n << "\n";
  out << "  R(d)/A(d) = " << realizable << "/" << total_couples << " = " << realizable_ratio() << "\n";
  return out.str();
}

ReportSummary summarize(int d, const std::vector<ClassificationRecord>& records) {
  ReportSummary s;
  s.degree = d;
  std::map<std::string, std::set<Couple>> orbits;
  for (const auto& rec : records) {
    if (rec.couple.degree() != d) continue;
    ++s.total_couples;
    switch (rec.status) {
      case Status::Realizable: ++s.realizable; break;
      case Status::NonrealizableTheorem: ++s.nonrealizable_theorem; break;
      case Status::NonrealizableCriterion: ++s.nonrealizable_criterion; break;
      case Status::Conjectured: ++s.conjectured; break;
      case Status::Unknown: ++s.unknown; break;
    }
    orbits[to_string(rec.status)].insert(orbit_of(rec.couple).canonical);
  }
  for (const auto& [status, canon] : orbits) s.orbit_counts[status] = canon.size();
  return s;
}

std::string csv_header() { return "sp,pos,neg,status,provenance"; }

std::string csv_row(const ClassificationRecord& record) {
  return record.couple.sp.to_string() + "," + std::to_string(record.couple.ap.pos) + "," +
         std::to_string(record.couple.ap.neg) + "," + to_string(record.status) + "," + csv_field(record.provenance);
}

}  // namespace descartes
