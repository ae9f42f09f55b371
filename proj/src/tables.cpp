#include <algorithm>
#include <map>

#include "descartes/realize.hpp"

namespace descartes {

namespace {

struct RawEntry {
  const char* sp;
  int pos;
  int neg;
  int orbit_size;
};

// One representative per orbit, in the order they were published, with the
// orbit lengths stated alongside them.
constexpr RawEntry kDegree4[] = {{"+---+", 0, 2, 2}};

constexpr RawEntry kDegree5[] = {{"+----+", 0, 3, 2}};

constexpr RawEntry kDegree6[] = {
    {"+-----+", 0, 2, 2},
    {"+-----+", 0, 4, 2},
    {"+-+---+", 0, 2, 4},
    {"++----+", 0, 4, 4},
};

constexpr RawEntry kDegree7[] = {
    {"++-----+", 0, 5, 4}, {"++----++", 0, 5, 2}, {"+----+-+", 0, 3, 4},
    {"+++----+", 0, 5, 4}, {"+------+", 0, 3, 2}, {"+------+", 0, 5, 2},
};

constexpr RawEntry kDegree8[] = {
    {"++-----++", 0, 6, 2}, {"++------+", 0, 6, 4}, {"+++-----+", 0, 6, 4}, {"++++----+", 0, 6, 4},
    {"+-+---+-+", 0, 2, 2}, {"+-+-+---+", 0, 2, 4}, {"+-+-----+", 0, 2, 4}, {"+-+-----+", 0, 4, 4},
    {"+---+---+", 0, 2, 2}, {"+---+---+", 0, 4, 2}, {"+-------+", 0, 2, 2}, {"+-------+", 0, 4, 2},
    {"+-------+", 0, 6, 2}, {"+++----++", 0, 6, 4}, {"+----+--+", 0, 4, 4}, {"+------++", 0, 4, 4},
    {"+-++----+", 0, 4, 4}, {"+-+----++", 0, 4, 4}, {"+----+-++", 0, 4, 4},
};

constexpr RawEntry kDegree9Conjectured[] = {{"+----++++-", 1, 6, 0}};

constexpr RawEntry kDegree11[] = {{"+-----+++++-", 1, 8, 0}};

template <std::size_t N>
std::vector<TableEntry> build(const RawEntry (&raw)[N], const std::string& tag, bool conjectured) {
  std::vector<TableEntry> out;
  for (const auto& e : raw) {
    TableEntry entry;
    entry.couple = make_couple(SignPattern::parse(e.sp), {e.pos, e.neg});
    entry.tag = tag;
    entry.stated_orbit_size = e.orbit_size != 0 ? e.orbit_size : static_cast<int>(orbit_of(entry.couple).size());
    entry.conjectured = conjectured;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

std::vector<TableEntry> table_representatives(int d) {
  switch (d) {
    case 4: return build(kDegree4, "degree-4-table", false);
    case 5: return build(kDegree5, "degree-5-table", false);
    case 6: return build(kDegree6, "degree-6-table", false);
    case 7: return build(kDegree7, "degree-7-table", false);
    case 8: return build(kDegree8, "degree-8-table", false);
    case 9: return build(kDegree9Conjectured, "degree-9-conjecture", true);
    case 11: return build(kDegree11, "degree-11-table", false);
    default: return {};
  }
}

std::vector<TableEntry> theorem_tables(int d) {
  std::vector<TableEntry> out;
  for (const auto& rep : table_representatives(d)) {
    for (const auto& member : orbit_of(rep.couple).members) {
      TableEntry e = rep;
      e.couple = member;
      out.push_back(std::move(e));
    }
  }
  std::sort(out.begin(), out.end(), [](const TableEntry& a, const TableEntry& b) { return a.couple < b.couple; });
  out.erase(std::unique(out.begin(), out.end(), [](const TableEntry& a, const TableEntry& b) { return a.couple == b.couple; }),
            out.end());
  return out;
}

std::optional<TableEntry> table_lookup(const Couple& couple) {
  static const std::map<int, std::vector<TableEntry>> by_degree = [] {
    std::map<int, std::vector<TableEntry>> out;
    for (int d : {4, 5, 6, 7, 8, 9, 11}) out[d] = theorem_tables(d);
    return out;
  }();
  const auto it = by_degree.find(couple.degree());
  if (it == by_degree.end()) return std::nullopt;
  const Couple normalized{couple.sp.normalized(), couple.ap};
  const auto& entries = it->second;
  const auto found = std::lower_bound(entries.begin(), entries.end(), normalized,
                                      [](const TableEntry& e, const Couple& c) { return e.couple < c; });
  if (found != entries.end() && found->couple == normalized) return *found;
  return std::nullopt;
}

}  // namespace descartes
