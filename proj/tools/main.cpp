// Command-line surface for the exact Lie-theory library: classification of
// simple types admitting locally-but-not-globally-conjugate adjoint pairs,
// dimension-data comparison, sampled local-conjugacy checks, dimension-bounded
// irreducible enumeration, and root-system dumps.

#include <cctype>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dimdata/cache.hpp"
#include "dimdata/conjugacy.hpp"
#include "dimdata/embed.hpp"
#include "dimdata/liealg.hpp"
#include "dimdata/repchar.hpp"
#include "dimdata/reports.hpp"
#include "dimdata/rootsys.hpp"

namespace {

using dimdata::reports::json;

// exit codes: 0 all checks pass, 1 mathematical check failed, 2 usage/input error
constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsageError = 2;

struct GlobalOpts {
  std::string format = "text";
  bool no_cache = false;
  std::optional<std::string> cache_dir;
};

json config_json(const GlobalOpts& g) {
  json c;
  c["version"] = dimdata::reports::kLibraryVersion;
  c["format"] = g.format;
  c["cache"] = !g.no_cache;
  if (!g.no_cache) c["cache_dir"] = dimdata::cache::directory().string();
  return c;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_classify(const GlobalOpts& g, int max_rank) {
  auto rows = dimdata::classify_examples(max_rank);

  bool agree = true;
  std::vector<dimdata::ObstructionReport> obs;
  obs.reserve(rows.size());
  for (const auto& row : rows) {
    obs.push_back(dimdata::obstruction_report(row.type));
    bool is_example = row.verdict == dimdata::Verdict::EXAMPLE;
    if (is_example != obs.back().obstructed) agree = false;
  }

  if (g.format == "json") {
    json doc;
    doc["command"] = "classify";
    doc["config"] = config_json(g);
    doc["max_rank"] = max_rank;
    json results = json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
      json r;
      r["type"] = rows[i].type.name();
      r["verdict"] = dimdata::verdict_name(rows[i].verdict);
      if (rows[i].b2_c2_alias) r["isomorphism_class"] = "B2=C2";
      r["obstruction"] = dimdata::reports::obstruction_json(obs[i]);
      results.push_back(std::move(r));
    }
    doc["results"] = std::move(results);
    doc["classifier_and_obstruction_agree"] = agree;
    doc["note"] =
        "the rank-2 rows B2 and C2 are one isomorphism class; the rank-2 case is "
        "included although the even-rank index is sometimes quoted from 4 upward";
    emit(doc);
  } else if (g.format == "csv") {
    std::cout << "type,verdict,obstructed\n";
    for (size_t i = 0; i < rows.size(); ++i)
      std::cout << rows[i].type.name() << "," << dimdata::verdict_name(rows[i].verdict) << ","
                << (obs[i].obstructed ? "yes" : "no") << "\n";
  } else {
    std::cout << "classification up to rank " << max_rank << "\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      std::cout << "  " << rows[i].type.name() << "\t" << dimdata::verdict_name(rows[i].verdict);
      if (rows[i].b2_c2_alias) std::cout << "  (B2=C2: one isomorphism class)";
      if ((rows[i].verdict == dimdata::Verdict::EXAMPLE) != obs[i].obstructed)
        std::cout << "  [MISMATCH with obstruction report]";
      std::cout << "\n";
    }
    std::cout << (agree ? "classifier and obstruction reports agree\n"
                        : "MISMATCH between classifier and obstruction reports\n");
  }
  return agree ? kOk : kMathFailure;
}

int run_dimension_data(const GlobalOpts& g, const std::string& type, long long bound) {
  dimdata::RootSystem rs = dimdata::RootSystem::build(dimdata::SimpleType::parse(type));
  dimdata::DimensionDataReport rep = dimdata::verify_dimension_data_equal(rs, bound);
  if (g.format == "json") {
    json doc;
    doc["command"] = "dimension-data";
    doc["config"] = config_json(g);
    doc["report"] = dimdata::reports::dimension_data_json(rep);
    emit(doc);
  } else if (g.format == "csv") {
    std::cout << dimdata::reports::dimension_data_csv(rep);
  } else {
    std::cout << "dimension data for " << type << " inside SO(" << 2 * rep.g_rank
              << "), bound " << bound << "\n";
    std::cout << "  highest weight\tdim\tdim V^i(H)\tdim V^i'(H)\tequal\n";
    for (const auto& r : rep.rows)
      std::cout << "  " << r.g_highest_weight.str() << "\t" << r.g_dimension << "\t"
                << r.fixed_untwisted << "\t" << r.fixed_twisted << "\t"
                << (r.equal() ? "yes" : "NO") << "\n";
    std::cout << (rep.all_equal() ? "all entries equal\n"
                                  : "DISCREPANCY in dimension data\n");
  }
  return rep.all_equal() ? kOk : kMathFailure;
}

int run_local_conjugacy(const GlobalOpts& g, const std::string& type, int samples,
                        std::uint64_t seed) {
  dimdata::RootSystem rs = dimdata::RootSystem::build(dimdata::SimpleType::parse(type));
  dimdata::LocalConjugacyReport rep = dimdata::local_conjugacy_check(rs, samples, seed);
  if (g.format == "json") {
    json doc;
    doc["command"] = "local-conjugacy";
    doc["config"] = config_json(g);
    doc["report"] = dimdata::reports::local_conjugacy_json(rep);
    emit(doc);
  } else {
    std::cout << "local conjugacy sampling for " << type << ": " << rep.samples
              << " samples, seed " << rep.seed << ", failures " << rep.failures << "\n";
    if (rep.min_one_multiplicity >= 0)
      std::cout << "minimal eigenvalue-1 multiplicity seen: " << rep.min_one_multiplicity << "\n";
  }
  return rep.passed() ? kOk : kMathFailure;
}

int run_irreps(const GlobalOpts& g, long long dim, int max_rank, bool simple_only) {
  auto recs = dimdata::enumerate_irreps_of_dim(dim, max_rank, !simple_only);
  if (g.format == "json") {
    json doc;
    doc["command"] = "irreps-of-dim";
    doc["config"] = config_json(g);
    doc["dim"] = dim;
    doc["max_rank"] = max_rank;
    doc["records"] = dimdata::reports::irreps_json(recs);
    doc["note"] =
        "product entries are reported once at the Lie-algebra level; a faithful group "
        "model and its quotient by a central {+-1} share the entry";
    emit(doc);
  } else if (g.format == "csv") {
    std::cout << "algebra,highest_weights,dim,form\n";
    for (const auto& r : recs)
      std::cout << r.algebra << ",\"" << r.weight_str() << "\"," << r.dim << ","
                << dimdata::form_type_name(r.form) << "\n";
  } else {
    std::cout << "irreducibles of dimension " << dim << " (rank <= " << max_rank << ")\n";
    for (const auto& r : recs)
      std::cout << "  " << r.algebra << "  " << r.weight_str() << "  "
                << dimdata::form_type_name(r.form) << "\n";
  }
  return kOk;
}

dimdata::WeightVector parse_weight(const std::string& text) {
  std::vector<dimdata::Rat> coords;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) coords.push_back(dimdata::rat_from_string(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  return dimdata::WeightVector(std::move(coords));
}

int run_branch(const GlobalOpts& g, const std::string& type, const std::string& weight_text,
               bool twisted) {
  dimdata::RootSystem h = dimdata::RootSystem::build(dimdata::SimpleType::parse(type));
  dimdata::AdjointEmbedding e = dimdata::build_adjoint_embedding(h);
  if (twisted) e = dimdata::twist_odd(e);
  dimdata::WeightVector lambda = parse_weight(weight_text);
  const dimdata::RootSystem& dn = dimdata::RootSystem::shared(e.d_type());
  dimdata::Character cg = dimdata::Character::irreducible(dn, lambda);
  dimdata::Character ch = dimdata::restrict_character(e, cg);
  dimdata::Decomposition dec = dimdata::decompose(ch);

  if (g.format == "csv") {
    std::cout << dimdata::reports::decomposition_csv(h, dec);
  } else if (g.format == "json") {
    json doc;
    doc["command"] = "branch";
    doc["config"] = config_json(g);
    doc["type"] = type;
    doc["twisted"] = twisted;
    doc["so_weight"] = dimdata::reports::weight_json(lambda);
    doc["so_dimension"] = dimdata::weyl_dimension(dn, lambda);
    doc["restricted_character"] = dimdata::reports::character_json(ch);
    json summands = json::array();
    for (const auto& [w, m] : dec.summands)
      summands.push_back(json::array(
          {dimdata::reports::weight_json(w), dimdata::weyl_dimension(h, w), m}));
    doc["decomposition"] = std::move(summands);
    doc["trivial_multiplicity"] = dec.trivial_multiplicity();
    emit(doc);
  } else {
    std::cout << "restriction of the SO(" << 2 * e.g_rank << ") irreducible " << lambda.str()
              << " to " << type << (twisted ? " (twisted embedding)" : "") << "\n";
    for (const auto& [w, m] : dec.summands)
      std::cout << "  " << w.str() << "  dim " << dimdata::weyl_dimension(h, w) << "  x " << m
                << "\n";
    std::cout << "fixed-space dimension: " << dec.trivial_multiplicity() << "\n";
  }
  return kOk;
}

int run_dump(const GlobalOpts& g, const std::string& type) {
  dimdata::RootSystem rs = dimdata::RootSystem::build(dimdata::SimpleType::parse(type));
  json doc = dimdata::reports::root_system_json(rs);
  if (g.format == "csv") {
    std::cout << "root\n";
    for (const auto& r : rs.roots()) std::cout << "\"" << r.str() << "\"\n";
  } else {
    emit(doc);
  }
  return kOk;
}

int run_obstruction(const GlobalOpts& g, const std::string& type) {
  auto rep = dimdata::obstruction_report(dimdata::SimpleType::parse(type));
  if (g.format == "text") {
    std::cout << rep.type.name() << ": "
              << (rep.obstructed ? "OBSTRUCTED" : "fails at " + rep.failing) << "\n";
    for (const auto& ing : rep.ingredients)
      std::cout << "  " << ing.name << ": " << (ing.pass ? "pass" : "FAIL")
                << (ing.detail.empty() ? "" : "  (" + ing.detail + ")") << "\n";
  } else {
    json doc = dimdata::reports::obstruction_json(rep);
    doc["config"] = config_json(g);
    emit(doc);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on adjoint embeddings into even orthogonal groups"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  std::string cache_dir_flag;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--no-cache", g.no_cache, "disable the disk cache");
  auto* cd = app.add_option("--cache-dir", cache_dir_flag,
                            "cache directory (overrides DIMDATA_CACHE_DIR)");

  auto* classify = app.add_subcommand("classify", "classify simple types up to a rank bound");
  classify->fallthrough();
  int max_rank = 8;
  classify->add_option("--max-rank", max_rank, "largest rank to classify")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* dd = app.add_subcommand("dimension-data",
                                "compare dimension data of the adjoint pair i, i'");
  dd->fallthrough();
  std::string dd_type;
  long long dd_bound = 100;
  dd->add_option("--type", dd_type, "simple type of H, e.g. B2")->required();
  dd->add_option("--bound", dd_bound, "dimension bound for SO(2N) representations")->required();

  auto* lc = app.add_subcommand("local-conjugacy", "sampled eigenvalue-multiset comparison");
  lc->fallthrough();
  std::string lc_type;
  int lc_samples = 100;
  std::uint64_t lc_seed = 1;
  lc->add_option("--type", lc_type)->required();
  lc->add_option("--samples", lc_samples);
  lc->add_option("--seed", lc_seed);

  auto* ir = app.add_subcommand("irreps-of-dim", "irreducibles of an exact dimension");
  ir->fallthrough();
  long long ir_dim = 4;
  int ir_max_rank = 4;
  bool ir_simple_only = false;
  ir->add_option("--dim", ir_dim)->required();
  ir->add_option("--max-rank", ir_max_rank);
  ir->add_flag("--simple-only", ir_simple_only, "exclude two-factor semisimple algebras");

  auto* br = app.add_subcommand("branch", "restrict one SO(2N) irreducible and decompose");
  br->fallthrough();
  std::string br_type, br_weight;
  bool br_twisted = false;
  br->add_option("--type", br_type, "simple type of H")->required();
  br->add_option("--weight", br_weight, "comma-separated D_N highest weight")->required();
  br->add_flag("--twisted", br_twisted, "use the odd-twisted embedding");

  auto* dump = app.add_subcommand("dump", "root system as JSON");
  dump->fallthrough();
  std::string dump_type;
  dump->add_option("--type", dump_type)->required();

  auto* obs = app.add_subcommand("obstruction", "proof-ingredient report for one type");
  obs->fallthrough();
  std::string obs_type;
  obs->add_option("--type", obs_type)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  g.cache_dir = cd->count() ? std::optional<std::string>(cache_dir_flag) : std::nullopt;
  dimdata::cache::configure(!g.no_cache, g.cache_dir);

  try {
    if (classify->parsed()) return run_classify(g, max_rank);
    if (dd->parsed()) return run_dimension_data(g, dd_type, dd_bound);
    if (lc->parsed()) return run_local_conjugacy(g, lc_type, lc_samples, lc_seed);
    if (ir->parsed()) return run_irreps(g, ir_dim, ir_max_rank, ir_simple_only);
    if (br->parsed()) return run_branch(g, br_type, br_weight, br_twisted);
    if (dump->parsed()) return run_dump(g, dump_type);
    if (obs->parsed()) return run_obstruction(g, obs_type);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kMathFailure;
  }
  return kUsageError;
}
