#include "dimdata/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dimdata/repchar.hpp"
#include "json.hpp"

namespace dimdata::cache {

namespace {

using json = nlohmann::ordered_json;

struct State {
  bool enabled = false;
  std::filesystem::path dir;
};

State& state() {
  static State s;
  return s;
}

std::filesystem::path default_dir() {
  if (const char* home = std::getenv("HOME"))
    return std::filesystem::path(home) / ".cache" / "dimdata";
  return std::filesystem::path(".dimdata-cache");
}

std::string weight_slug(const WeightVector& w) {
  std::string s;
  for (size_t i = 0; i < w.coords.size(); ++i) {
    if (i) s += "_";
    std::string c = rat_to_string(w.coords[i]);
    for (char& ch : c) {
      if (ch == '/') ch = 'o';
      if (ch == '-') ch = 'm';
    }
    s += c;
  }
  return s;
}

std::optional<json> read_checked(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  json doc;
  try {
    in >> doc;
  } catch (const std::exception&) {
    return std::nullopt;  // corrupt; caller regenerates
  }
  if (!doc.contains("checksum") || !doc.contains("payload")) return std::nullopt;
  std::string payload = doc["payload"].dump();
  std::ostringstream want;
  want << std::hex << fnv1a(payload);
  if (doc["checksum"].get<std::string>() != want.str()) return std::nullopt;
  if (!doc.contains("convention") ||
      doc["convention"].get<std::string>() != kConventionVersion)
    return std::nullopt;
  return doc["payload"];
}

void write_checked(const std::filesystem::path& file, json payload) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  if (ec) return;  // cache is best effort
  json doc;
  doc["convention"] = kConventionVersion;
  std::ostringstream sum;
  sum << std::hex << fnv1a(payload.dump());
  doc["checksum"] = sum.str();
  doc["payload"] = std::move(payload);
  std::ofstream out(file);
  if (out) out << doc.dump();
}

std::optional<std::map<WeightVector, long long>> load_character(const SimpleType& t,
                                                                const WeightVector& lambda) {
  if (!enabled()) return std::nullopt;
  auto file = directory() / ("char_" + t.name() + "_" + weight_slug(lambda) + ".json");
  auto payload = read_checked(file);
  if (!payload) return std::nullopt;
  std::map<WeightVector, long long> terms;
  try {
    for (const auto& entry : *payload) {
      std::vector<Rat> coords;
      for (const auto& c : entry[0]) coords.push_back(rat_from_string(c.get<std::string>()));
      terms[WeightVector(std::move(coords))] = entry[1].get<long long>();
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return terms;
}

void store_character(const SimpleType& t, const WeightVector& lambda,
                     const std::map<WeightVector, long long>& terms) {
  if (!enabled()) return;
  json payload = json::array();
  for (const auto& [w, m] : terms) {
    json coords = json::array();
    for (const Rat& c : w.coords) coords.push_back(rat_to_string(c));
    payload.push_back(json::array({coords, m}));
  }
  write_checked(directory() / ("char_" + t.name() + "_" + weight_slug(lambda) + ".json"),
                std::move(payload));
}

}  // namespace

void configure(bool on, const std::optional<std::string>& dir_flag) {
  State& s = state();
  s.enabled = on;
  if (dir_flag) {
    s.dir = *dir_flag;
  } else if (const char* env = std::getenv("DIMDATA_CACHE_DIR")) {
    s.dir = env;
  } else {
    s.dir = default_dir();
  }
  if (on) {
    set_character_disk_hooks(CharacterDiskHooks{load_character, store_character});
    set_structure_table_provider([](const RootSystem& rs) { return structure_table(rs); });
  } else {
    clear_character_disk_hooks();
    set_structure_table_provider({});
  }
}

bool enabled() { return state().enabled; }

std::filesystem::path directory() {
  if (state().dir.empty()) {
    if (const char* env = std::getenv("DIMDATA_CACHE_DIR")) state().dir = env;
    else state().dir = default_dir();
  }
  return state().dir;
}

std::uint64_t fnv1a(const std::string& payload) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

StructureTable structure_table(const RootSystem& rs) {
  if (!enabled()) return StructureTable::build(rs);
  auto file = directory() / ("st_" + rs.type().name() + "_" + kConventionVersion + ".json");
  if (auto payload = read_checked(file)) {
    try {
      std::vector<std::vector<std::pair<int, SparseVec>>> rows;
      for (const auto& row : (*payload)["rows"]) {
        std::vector<std::pair<int, SparseVec>> r;
        for (const auto& entry : row) {
          SparseVec v;
          for (const auto& term : entry[1])
            v.emplace_back(term[0].get<int>(), term[1].get<long long>());
          r.emplace_back(entry[0].get<int>(), std::move(v));
        }
        rows.push_back(std::move(r));
      }
      std::unordered_map<long long, long long> constants;
      for (const auto& c : (*payload)["constants"])
        constants[c[0].get<long long>()] = c[1].get<long long>();
      return StructureTable::restore(rs, std::move(rows), std::move(constants));
    } catch (const std::exception&) {
      // fall through and rebuild
    }
  }
  StructureTable st = StructureTable::build(rs);
  json payload;
  json rows = json::array();
  for (const auto& row : st.rows()) {
    json r = json::array();
    for (const auto& [j, vec] : row) {
      json terms = json::array();
      for (const auto& [k, c] : vec) terms.push_back(json::array({k, c}));
      r.push_back(json::array({j, terms}));
    }
    rows.push_back(std::move(r));
  }
  payload["rows"] = std::move(rows);
  json constants = json::array();
  std::vector<std::pair<long long, long long>> sorted(st.constants().begin(), st.constants().end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [k, v] : sorted) constants.push_back(json::array({k, v}));
  payload["constants"] = std::move(constants);
  write_checked(file, std::move(payload));
  return st;
}

}  // namespace dimdata::cache
