#include "dimdata/rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace dimdata {

std::string SimpleType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

SimpleType SimpleType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("cannot parse simple type '" + s + "'");
  char f = s[0];
  if (std::string("ABCDEFG").find(f) == std::string::npos)
    throw std::invalid_argument("unknown family '" + std::string(1, f) + "' in type '" + s + "'");
  int rank;
  try {
    size_t used = 0;
    rank = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rank in type '" + s + "'");
  }
  SimpleType t{static_cast<Family>(f), rank};
  validate(t);
  return t;
}

bool is_valid(const SimpleType& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 3;
    case Family::E: return t.rank == 6 || t.rank == 7 || t.rank == 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

void validate(const SimpleType& t) {
  if (is_valid(t)) return;
  std::ostringstream os;
  os << "invalid simple type " << t.name()
     << "; admissible ranks: A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2";
  throw std::invalid_argument(os.str());
}

WeightVector WeightVector::from_ints(const std::vector<long>& v) {
  WeightVector w;
  w.coords.reserve(v.size());
  for (long x : v) w.coords.emplace_back(x);
  return w;
}

bool WeightVector::is_zero() const {
  for (const Rat& c : coords)
    if (c != 0) return false;
  return true;
}

bool WeightVector::is_integral() const {
  for (const Rat& c : coords)
    if (!is_integer(c)) return false;
  return true;
}

bool WeightVector::is_dominant() const {
  for (const Rat& c : coords)
    if (c < 0) return false;
  return true;
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  if (coords.size() != o.coords.size()) throw std::invalid_argument("weight rank mismatch");
  for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
  if (coords.size() != o.coords.size()) throw std::invalid_argument("weight rank mismatch");
  for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

WeightVector WeightVector::operator-() const {
  WeightVector w = *this;
  for (Rat& c : w.coords) c = -c;
  return w;
}

WeightVector WeightVector::scaled(const Rat& c) const {
  WeightVector w = *this;
  for (Rat& x : w.coords) x *= c;
  return w;
}

bool operator<(const WeightVector& a, const WeightVector& b) {
  if (a.coords.size() != b.coords.size()) return a.coords.size() < b.coords.size();
  for (size_t i = 0; i < a.coords.size(); ++i) {
    int c = cmp(a.coords[i], b.coords[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string WeightVector::str() const {
  std::string s = "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ", ";
    s += rat_to_string(coords[i]);
  }
  return s + ")";
}

bool DiagramAutomorphism::is_identity() const {
  for (size_t i = 0; i < node_permutation.size(); ++i)
    if (node_permutation[i] != static_cast<int>(i)) return false;
  return true;
}

int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    size_t j = i, len = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<size_t>(perm[j]);
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

namespace {

// Cartan matrix with the convention cartan[i][j] = <alpha_j, alpha_i_vee>,
// so column j holds the fundamental-weight coordinates of alpha_j.
std::vector<std::vector<long>> cartan_matrix(const SimpleType& t) {
  int n = t.rank;
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain_edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      break;
    case Family::B:
      // alpha_n short: <alpha_{n-1}, alpha_n_vee> = -2
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Family::C:
      // alpha_n long
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) chain_edge(i, i + 1);
      chain_edge(n - 3, n - 1);
      break;
    case Family::E: {
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4
      std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
      if (n >= 7) edges.push_back({6, 7});
      if (n == 8) edges.push_back({7, 8});
      for (auto [u, v] : edges) chain_edge(u - 1, v - 1);
      break;
    }
    case Family::F:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      chain_edge(0, 1);
      chain_edge(2, 3);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

std::vector<DiagramAutomorphism> compute_diagram_automorphisms(
    const std::vector<std::vector<long>>& cartan);

// Smallest positive integers d with diag(d) * cartan symmetric.
std::vector<long> symmetrizer_of(const SimpleType& t) {
  int n = t.rank;
  std::vector<long> d(n, 1);
  switch (t.family) {
    case Family::A:
    case Family::D:
    case Family::E:
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Family::C:
      d[n - 1] = 2;
      break;
    case Family::F:
      d[0] = d[1] = 2;
      break;
    case Family::G:
      d[1] = 3;
      break;
  }
  return d;
}

}  // namespace

RootSystem RootSystem::build(const SimpleType& t) {
  validate(t);
  RootSystem rs;
  rs.type_ = t;
  rs.cartan_ = cartan_matrix(t);
  rs.sym_ = symmetrizer_of(t);
  int n = t.rank;

  // sanity: symmetrizer really symmetrizes
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.sym_[i] * rs.cartan_[i][j] != rs.sym_[j] * rs.cartan_[j][i])
        throw std::logic_error("symmetrizer mismatch for " + t.name());

  rs.simple_roots_.reserve(n);
  for (int j = 0; j < n; ++j) {
    WeightVector a(n);
    for (int i = 0; i < n; ++i) a.coords[i] = rs.cartan_[i][j];
    rs.simple_roots_.push_back(std::move(a));
  }

  Mat<Rat> A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A.at(i, j) = rs.cartan_[i][j];
  rs.cartan_inv_ = A.inverse();

  // (omega_i, omega_j) = d_i * (A^{-1})_{ij}
  rs.gram_ = Mat<Rat>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.gram_.at(i, j) = Rat(rs.sym_[i]) * rs.cartan_inv_.at(i, j);

  // Close the simple roots under simple reflections in integer arithmetic.
  // Every root has pairings in [-3, 3] with every simple coroot, and the
  // simple reflection acts on root-basis coordinates by rc[i] -= fw[i],
  // so both coordinate systems stay integral throughout.
  struct IntRoot {
    std::vector<int> fw;  // fundamental-weight coordinates
    std::vector<int> rc;  // root-basis coordinates
  };
  auto pack = [n](const std::vector<int>& c) {
    std::uint64_t key = 0;
    for (int i = n - 1; i >= 0; --i) key = key * 7 + static_cast<std::uint64_t>(c[i] + 3);
    return key;
  };
  if (n > 22) throw std::invalid_argument("rank > 22 not supported");

  std::vector<IntRoot> all;
  std::unordered_set<std::uint64_t> seen;
  std::deque<IntRoot> queue;
  for (int j = 0; j < n; ++j) {
    IntRoot r;
    r.fw.resize(n);
    for (int i = 0; i < n; ++i) r.fw[i] = static_cast<int>(rs.cartan_[i][j]);
    r.rc.assign(n, 0);
    r.rc[j] = 1;
    if (seen.insert(pack(r.fw)).second) queue.push_back(std::move(r));
  }
  while (!queue.empty()) {
    IntRoot r = queue.front();
    queue.pop_front();
    all.push_back(r);
    for (int i = 0; i < n; ++i) {
      if (r.fw[i] == 0) continue;
      IntRoot img = r;
      for (int k = 0; k < n; ++k) img.fw[k] -= r.fw[i] * static_cast<int>(rs.cartan_[k][i]);
      img.rc[i] -= r.fw[i];
      if (seen.insert(pack(img.fw)).second) queue.push_back(std::move(img));
    }
  }

  struct PosRoot {
    long height;
    WeightVector fw;
  };
  std::vector<PosRoot> positives;
  for (const IntRoot& r : all) {
    bool pos = true;
    long height = 0;
    for (int c : r.rc) {
      if (c < 0) pos = false;
      height += c;
    }
    if (!pos) continue;
    WeightVector w(n);
    for (int i = 0; i < n; ++i) w.coords[i] = r.fw[i];
    positives.push_back({height, std::move(w)});
  }
  std::sort(positives.begin(), positives.end(), [](const PosRoot& a, const PosRoot& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.fw < b.fw;
  });
  if (2 * positives.size() != all.size())
    throw std::logic_error("root enumeration is not negation-symmetric for " + t.name());

  rs.positive_roots_.reserve(positives.size());
  for (PosRoot& p : positives) rs.positive_roots_.push_back(std::move(p.fw));
  rs.roots_.reserve(all.size());
  for (const WeightVector& r : rs.positive_roots_) rs.roots_.push_back(r);
  for (const WeightVector& r : rs.positive_roots_) rs.roots_.push_back(-r);

  for (size_t k = 0; k < rs.positive_roots_.size(); ++k)
    rs.positive_index_[rs.positive_roots_[k]] = static_cast<int>(k);

  rs.rho_ = WeightVector(n);
  for (Rat& c : rs.rho_.coords) c = 1;  // half-sum of positive roots

  rs.diagram_automorphisms_ = compute_diagram_automorphisms(rs.cartan_);

  // coroots: beta_vee = sum_i b_i * (d_i / d_beta) * alpha_i_vee
  for (const WeightVector& beta : rs.roots_) {
    std::vector<Rat> rb = rs.to_root_basis(beta);
    Rat norm = rs.inner(beta, beta);
    std::vector<long> c(n);
    for (int i = 0; i < n; ++i) {
      Rat ci = rb[i] * Rat(2 * rs.sym_[i]) / norm;
      c[i] = to_long(ci);
    }
    rs.coroots_[beta] = std::move(c);
  }

  return rs;
}

const RootSystem& RootSystem::shared(const SimpleType& t) {
  static std::mutex mu;
  static std::map<SimpleType, std::unique_ptr<RootSystem>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(t);
  if (it == registry.end())
    it = registry.emplace(t, std::make_unique<RootSystem>(build(t))).first;
  return *it->second;
}

const std::vector<long>& RootSystem::coroot(const WeightVector& root) const {
  auto it = coroots_.find(root);
  if (it == coroots_.end()) throw std::invalid_argument("not a root: " + root.str());
  return it->second;
}

Rat RootSystem::inner(const WeightVector& a, const WeightVector& b) const {
  Rat s(0);
  int n = rank();
  for (int i = 0; i < n; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (b.coords[j] != 0) s += a.coords[i] * gram_.at(i, j) * b.coords[j];
  }
  return s;
}

Rat RootSystem::pairing_coroot(const WeightVector& lambda, const WeightVector& beta) const {
  return 2 * inner(lambda, beta) / inner(beta, beta);
}

WeightVector RootSystem::simple_reflect(const WeightVector& w, int i) const {
  WeightVector out = w;
  const Rat& c = w.coords[i];
  if (c == 0) return out;
  for (int k = 0; k < rank(); ++k) out.coords[k] -= c * Rat(cartan_[k][i]);
  return out;
}

WeightVector RootSystem::reflect(const WeightVector& w, const WeightVector& root) const {
  Rat c = pairing_coroot(w, root);
  WeightVector out = w;
  if (c == 0) return out;
  for (int k = 0; k < rank(); ++k) out.coords[k] -= c * root.coords[k];
  return out;
}

bool RootSystem::is_root(const WeightVector& w) const {
  if (positive_index_.count(w)) return true;
  return positive_index_.count(-w) > 0;
}

int RootSystem::positive_root_index(const WeightVector& w) const {
  auto it = positive_index_.find(w);
  return it == positive_index_.end() ? -1 : it->second;
}

std::vector<Rat> RootSystem::to_root_basis(const WeightVector& w) const {
  std::vector<Rat> c(rank(), Rat(0));
  for (int i = 0; i < rank(); ++i) {
    if (w.coords[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) c[j] += cartan_inv_.at(j, i) * w.coords[i];
  }
  return c;
}

Rat RootSystem::height(const WeightVector& w) const {
  std::vector<Rat> c = to_root_basis(w);
  Rat h(0);
  for (const Rat& x : c) h += x;
  return h;
}

WeightVector RootSystem::dominant_representative(const WeightVector& w) const {
  WeightVector v = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank(); ++i) {
      if (v.coords[i] < 0) {
        v = simple_reflect(v, i);
        moved = true;
      }
    }
  }
  return v;
}

std::set<WeightVector> RootSystem::weyl_orbit(const WeightVector& w) const {
  std::set<WeightVector> orbit{w};
  std::deque<WeightVector> queue{w};
  while (!queue.empty()) {
    WeightVector v = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank(); ++i) {
      WeightVector img = simple_reflect(v, i);
      if (orbit.insert(img).second) queue.push_back(img);
    }
  }
  return orbit;
}

namespace {
std::vector<DiagramAutomorphism> compute_diagram_automorphisms(
    const std::vector<std::vector<long>>& cartan_) {
  int n = static_cast<int>(cartan_.size());

  std::vector<DiagramAutomorphism> out;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> extend = [&](int i) {
    if (i == n) {
      DiagramAutomorphism d;
      d.node_permutation = perm;
      d.parity = permutation_sign(perm);
      out.push_back(std::move(d));
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (used[img] || cartan_[img][img] != cartan_[i][i]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (cartan_[perm[j]][img] != cartan_[j][i]) ok = false;
        if (cartan_[img][perm[j]] != cartan_[i][j]) ok = false;
      }
      if (!ok) continue;
      perm[i] = img;
      used[img] = true;
      extend(i + 1);
      used[img] = false;
      perm[i] = -1;
    }
  };
  extend(0);
  std::sort(out.begin(), out.end(), [](const DiagramAutomorphism& a, const DiagramAutomorphism& b) {
    return a.node_permutation < b.node_permutation;
  });
  return out;
}
}  // namespace

WeightVector RootSystem::fundamental_weight(int i) const {
  WeightVector w(rank());
  w.coords[i] = 1;
  return w;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::EXAMPLE: return "EXAMPLE";
    case Verdict::NO_ODD_RANK: return "NO_ODD_RANK";
    case Verdict::NO_ODD_AUTOMORPHISM: return "NO_ODD_AUTOMORPHISM";
  }
  return "?";
}

std::vector<ClassifiedType> classify_examples(int max_rank) {
  std::vector<SimpleType> types;
  for (int r = 1; r <= max_rank; ++r)
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
      SimpleType t{f, r};
      if (is_valid(t)) types.push_back(t);
    }

  std::vector<ClassifiedType> out;
  out.reserve(types.size());
  for (const SimpleType& t : types) {
    ClassifiedType row;
    row.type = t;
    row.b2_c2_alias = (t.rank == 2 && (t.family == Family::B || t.family == Family::C));
    if (t.rank % 2 != 0) {
      row.verdict = Verdict::NO_ODD_RANK;
    } else {
      const RootSystem& rs = RootSystem::shared(t);
      bool all_even = true;
      for (const DiagramAutomorphism& d : rs.diagram_automorphisms())
        if (d.parity != 1) { all_even = false; break; }
      row.verdict = all_even ? Verdict::EXAMPLE : Verdict::NO_ODD_AUTOMORPHISM;
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace dimdata
