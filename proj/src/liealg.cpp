#include "dimdata/liealg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dimdata {

namespace {

// Root bookkeeping for the structure-constant recursion. Roots are keyed
// by their fundamental-weight coordinates, which lie in [-3, 3] for every
// root, so a vector packs exactly into one radix-7 machine word.
struct RootIndex {
  int rank = 0;
  int npos = 0;
  std::vector<std::vector<int>> coords;  // id -> fw coords, positives then negatives
  std::vector<Rat> norm;                 // id -> (beta, beta)
  std::unordered_map<std::uint64_t, int> lookup;

  std::uint64_t pack(const std::vector<int>& c) const {
    std::uint64_t key = 0;
    for (int i = rank - 1; i >= 0; --i) key = key * 7 + static_cast<std::uint64_t>(c[i] + 3);
    return key;
  }
  int id_of(const std::vector<int>& c) const {
    for (int x : c)
      if (x < -3 || x > 3) return -1;
    auto it = lookup.find(pack(c));
    return it == lookup.end() ? -1 : it->second;
  }
  int negate(int id) const { return id < npos ? id + npos : id - npos; }
  bool is_positive(int id) const { return id < npos; }
  int sum(int a, int b) const {
    std::vector<int> c(coords[a].size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coords[a][i] + coords[b][i];
    return id_of(c);
  }
};

std::vector<int> to_int_coords(const WeightVector& w) {
  std::vector<int> c(w.coords.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = static_cast<int>(to_long(w.coords[i]));
  return c;
}

// Computes all Chevalley constants N_{alpha,beta}. Signs are fixed by
// choosing N > 0 on extraspecial pairs; every other constant follows from
// antisymmetry, N_{-a,-b} = -N_{a,b}, the three-root proportionality and
// the four-root Jacobi relation.
class ConstantSolver {
 public:
  ConstantSolver(const RootSystem& rs, const RootIndex& ri) : rs_(rs), ri_(ri) {
    int m = ri_.npos;
    special_.resize(m);
    extraspecial_.assign(m, {-1, -1});
    for (int xi = 0; xi < m; ++xi) {
      for (int a = 0; a < xi; ++a) {
        std::vector<int> rest(ri_.coords[xi].size());
        for (size_t i = 0; i < rest.size(); ++i) rest[i] = ri_.coords[xi][i] - ri_.coords[a][i];
        int b = ri_.id_of(rest);
        if (b < 0 || !ri_.is_positive(b)) continue;
        if (a < b) {
          special_[xi].emplace_back(a, b);
          if (extraspecial_[xi].first < 0) extraspecial_[xi] = {a, b};
        }
      }
    }
    for (int xi = 0; xi < m; ++xi) {
      for (auto [a, b] : special_[xi]) {
        long long n;
        if (std::make_pair(a, b) == extraspecial_[xi]) {
          n = chain_up_length(b, a) + 1;
        } else {
          auto [g, d] = extraspecial_[xi];
          Rat acc(0);
          int d_minus_a = diff(d, a);
          if (d_minus_a >= 0)
            acc += rat_ll(get(d, ri_.negate(a)) * get(g, ri_.negate(b))) / ri_.norm[d_minus_a];
          int g_minus_a = diff(g, a);
          if (g_minus_a >= 0)
            acc += rat_ll(get(ri_.negate(a), g) * get(d, ri_.negate(b))) / ri_.norm[g_minus_a];
          acc *= ri_.norm[xi] / rat_ll(get(g, d));
          n = to_long(acc);
          long long expect = chain_up_length(b, a) + 1;
          if (n == 0 || std::abs(n) != expect) {
            std::ostringstream os;
            os << "structure-constant recursion failed for " << rs_.type().name() << " at pair ("
               << rs_.positive_roots()[a].str() << ", " << rs_.positive_roots()[b].str() << ")";
            throw std::logic_error(os.str());
          }
        }
        npos_table_[key(a, b)] = n;
      }
    }
  }

  // N_{mu,nu} for arbitrary root ids whose sum is a root.
  long long get(int mu, int nu) {
    bool mu_pos = ri_.is_positive(mu), nu_pos = ri_.is_positive(nu);
    if (mu_pos && nu_pos) {
      if (mu < nu) return lookup_pos(mu, nu);
      return -lookup_pos(nu, mu);
    }
    if (!mu_pos && !nu_pos) return -get(ri_.negate(mu), ri_.negate(nu));
    if (!mu_pos) return -get(nu, mu);
    // mu positive, nu negative; xi = mu + nu is a root
    int xi = ri_.sum(mu, nu);
    if (xi < 0) throw std::logic_error("structure constant requested for a non-root sum");
    Rat val;
    if (ri_.is_positive(xi)) {
      // N_{mu,nu} = -(xi,xi)/(mu,mu) * N_{-nu,xi}, with (-nu) + xi = mu
      val = -ri_.norm[xi] / ri_.norm[mu] * rat_ll(get(ri_.negate(nu), xi));
    } else {
      // N_{mu,nu} = (xi,xi)/(nu,nu) * N_{-xi,mu}, with (-xi) + mu = -nu
      int nu_pos_id = ri_.negate(nu);
      val = ri_.norm[xi] / ri_.norm[nu_pos_id] * rat_ll(get(ri_.negate(xi), mu));
    }
    return to_long(val);
  }

 private:
  static long long key(int a, int b) { return (static_cast<long long>(a) << 32) | static_cast<unsigned>(b); }

  long long lookup_pos(int a, int b) const {
    auto it = npos_table_.find(key(a, b));
    if (it == npos_table_.end()) throw std::logic_error("positive structure constant missing");
    return it->second;
  }

  // Largest p with (root b) - p*(root a) still a root.
  long chain_up_length(int b, int a) const {
    long p = 0;
    std::vector<int> c = ri_.coords[b];
    while (true) {
      for (size_t i = 0; i < c.size(); ++i) c[i] -= ri_.coords[a][i];
      if (ri_.id_of(c) < 0) break;
      ++p;
    }
    return p;
  }

  // id of (root x) - (root y) if it is a root, else -1
  int diff(int x, int y) const {
    std::vector<int> c(ri_.coords[x].size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = ri_.coords[x][i] - ri_.coords[y][i];
    return ri_.id_of(c);
  }

  const RootSystem& rs_;
  const RootIndex& ri_;
  std::vector<std::vector<std::pair<int, int>>> special_;
  std::vector<std::pair<int, int>> extraspecial_;
  std::unordered_map<long long, long long> npos_table_;
};

}  // namespace

StructureTable StructureTable::build(const RootSystem& rs) {
  StructureTable st;
  st.rs_ = rs;
  int m = static_cast<int>(rs.positive_roots().size());
  int r = rs.rank();
  st.npos_ = m;
  st.dim_ = 2 * m + r;

  RootIndex ri;
  ri.rank = r;
  ri.npos = m;
  ri.coords.resize(2 * m);
  ri.norm.resize(2 * m);
  st.roots_by_id_.resize(2 * m);
  for (int k = 0; k < m; ++k) {
    const WeightVector& beta = rs.positive_roots()[k];
    ri.coords[k] = to_int_coords(beta);
    ri.norm[k] = rs.inner(beta, beta);
    ri.lookup[ri.pack(ri.coords[k])] = k;
    st.roots_by_id_[k] = beta;
    WeightVector neg = -beta;
    ri.coords[m + k] = to_int_coords(neg);
    ri.norm[m + k] = ri.norm[k];
    ri.lookup[ri.pack(ri.coords[m + k])] = m + k;
    st.roots_by_id_[m + k] = neg;
  }

  ConstantSolver solver(rs, ri);

  st.rows_.resize(st.dim_);
  auto add_entry = [&st](int i, int j, SparseVec v) {
    if (v.empty()) return;
    st.rows_[i].emplace_back(j, std::move(v));
  };

  // root ids coincide with the e/f basis layout
  std::vector<std::vector<long>> coroot_coords(2 * m);
  for (int id = 0; id < 2 * m; ++id) coroot_coords[id] = rs.coroot(st.roots_by_id_[id]);

  std::vector<int> scratch(r);
  for (int a = 0; a < 2 * m; ++a) {
    const std::vector<int>& ca = ri.coords[a];
    for (int b = 0; b < 2 * m; ++b) {
      if (a == b) continue;
      if (ri.negate(a) == b) {
        SparseVec v;
        for (int i = 0; i < r; ++i) {
          long c = coroot_coords[a][i];
          if (c != 0) v.emplace_back(st.h_index(i), c);
        }
        add_entry(a, b, std::move(v));
        continue;
      }
      const std::vector<int>& cb = ri.coords[b];
      bool in_range = true;
      for (int i = 0; i < r; ++i) {
        scratch[i] = ca[i] + cb[i];
        if (scratch[i] < -3 || scratch[i] > 3) in_range = false;
      }
      if (!in_range) continue;
      int s = ri.id_of(scratch);
      if (s < 0) continue;
      long long n = solver.get(a, b);
      long long k = (static_cast<long long>(a) << 32) | static_cast<unsigned>(b);
      st.constants_[k] = n;
      add_entry(a, b, SparseVec{{s, n}});
    }
  }

  // [h_i, e_b] = <beta_b, alpha_i_vee> e_b
  for (int i = 0; i < r; ++i) {
    for (int b = 0; b < 2 * m; ++b) {
      long c = ri.coords[b][i];
      if (c == 0) continue;
      add_entry(st.h_index(i), b, SparseVec{{b, c}});
      add_entry(b, st.h_index(i), SparseVec{{b, -c}});
    }
  }

  for (auto& row : st.rows_)
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  return st;
}

StructureTable StructureTable::restore(const RootSystem& rs,
                                       std::vector<std::vector<std::pair<int, SparseVec>>> rows,
                                       std::unordered_map<long long, long long> constants) {
  StructureTable st;
  st.rs_ = rs;
  int m = static_cast<int>(rs.positive_roots().size());
  st.npos_ = m;
  st.dim_ = 2 * m + rs.rank();
  if (static_cast<int>(rows.size()) != st.dim_)
    throw std::invalid_argument("restored bracket table has wrong dimension");
  st.rows_ = std::move(rows);
  st.constants_ = std::move(constants);
  st.roots_by_id_.resize(2 * m);
  for (int k = 0; k < m; ++k) {
    st.roots_by_id_[k] = rs.positive_roots()[k];
    st.roots_by_id_[m + k] = -rs.positive_roots()[k];
  }
  return st;
}

std::string StructureTable::basis_label(int idx) const {
  if (idx < npos_) return "e" + roots_by_id_[idx].str();
  if (idx < 2 * npos_) return "f" + roots_by_id_[idx - npos_].str();
  return "h" + std::to_string(idx - 2 * npos_ + 1);
}

const SparseVec& StructureTable::bracket(int i, int j) const {
  static const SparseVec empty;
  const auto& row = rows_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const auto& e, int jj) { return e.first < jj; });
  if (it == row.end() || it->first != j) return empty;
  return it->second;
}

SparseVec StructureTable::bracket_vectors(const SparseVec& x, const SparseVec& y) const {
  std::map<int, long long> acc;
  for (const auto& [i, xi] : x)
    for (const auto& [j, yj] : y) {
      const SparseVec& b = bracket(i, j);
      for (const auto& [k, c] : b) acc[k] += xi * yj * c;
    }
  SparseVec out;
  for (const auto& [k, c] : acc)
    if (c != 0) out.emplace_back(k, c);
  return out;
}

int StructureTable::root_id(const WeightVector& root) const {
  int k = rs_.positive_root_index(root);
  if (k >= 0) return k;
  k = rs_.positive_root_index(-root);
  if (k >= 0) return npos_ + k;
  throw std::invalid_argument("not a root: " + root.str());
}

const WeightVector& StructureTable::root_of_id(int id) const { return roots_by_id_[id]; }

long long StructureTable::structure_constant(const WeightVector& alpha, const WeightVector& beta) const {
  int a = root_id(alpha), b = root_id(beta);
  long long k = (static_cast<long long>(a) << 32) | static_cast<unsigned>(b);
  auto it = constants_.find(k);
  if (it == constants_.end())
    throw std::invalid_argument("sum is not a root: " + alpha.str() + " + " + beta.str());
  return it->second;
}

namespace {
StructureTableProvider& table_provider() {
  static StructureTableProvider p;
  return p;
}
}  // namespace

void set_structure_table_provider(StructureTableProvider p) { table_provider() = std::move(p); }

StructureTable make_structure_table(const RootSystem& rs) {
  if (table_provider()) return table_provider()(rs);
  return StructureTable::build(rs);
}

LinearMap adjoint_matrix(const StructureTable& st, const std::vector<Rat>& x) {
  int n = st.dim();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("coefficient vector has wrong dimension");
  LinearMap m(n, n);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (const auto& [j, vec] : st.rows()[i])
      for (const auto& [k, c] : vec) m.at(k, j) += x[i] * rat_ll(c);
  }
  return m;
}

SparseMat adjoint_matrix_sparse(const StructureTable& st, int basis_index) {
  int n = st.dim();
  SparseMat m(n, n);
  for (const auto& [j, vec] : st.rows()[basis_index])
    for (const auto& [k, c] : vec) m.add(k, j, rat_ll(c));
  m.sort_rows();
  return m;
}

BilinearForm killing_form(const StructureTable& st) {
  int n = st.dim();
  std::vector<SparseMat> ads;
  ads.reserve(n);
  for (int i = 0; i < n; ++i) ads.push_back(adjoint_matrix_sparse(st, i));
  // column view of each ad for the trace pairing
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> cols(n);
  for (int i = 0; i < n; ++i) {
    cols[i].assign(n, {});
    for (int r = 0; r < n; ++r)
      for (const auto& [c, v] : ads[i].row[r]) cols[i][c].emplace_back(r, v);
  }
  BilinearForm gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat tr(0);
      for (int r = 0; r < n; ++r)
        for (const auto& [c, v] : ads[i].row[r])
          for (const auto& [r2, w] : cols[j][r])
            if (r2 == c) tr += v * w;
      gram.at(i, j) = tr;
      gram.at(j, i) = tr;
    }
  return gram;
}

LinearMap induced_automorphism(const StructureTable& st, const DiagramAutomorphism& d) {
  const RootSystem& rs = st.root_system();
  int r = rs.rank(), m = st.num_positive(), n = st.dim();
  if (static_cast<int>(d.node_permutation.size()) != r)
    throw std::invalid_argument("diagram automorphism rank mismatch");
  // verify it preserves the Cartan matrix
  const auto& a = rs.cartan();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (a[d.node_permutation[i]][d.node_permutation[j]] != a[i][j])
        throw std::invalid_argument("node permutation does not preserve the Cartan matrix");

  if (d.is_identity()) return LinearMap::identity(n);

  // image of each positive root under the node permutation
  std::vector<int> image(m, -1);
  for (int k = 0; k < m; ++k) {
    std::vector<Rat> rb = rs.to_root_basis(rs.positive_roots()[k]);
    WeightVector img(r);
    for (int i = 0; i < r; ++i) {
      if (rb[i] == 0) continue;
      const WeightVector& target = rs.simple_roots()[d.node_permutation[i]];
      for (int q = 0; q < r; ++q) img.coords[q] += rb[i] * target.coords[q];
    }
    image[k] = rs.positive_root_index(img);
    if (image[k] < 0) throw std::logic_error("permuted root left the root system");
  }

  // signs by height recursion through a fixed decomposition of each root
  std::vector<long long> sign(m, 0);
  for (int k = 0; k < m; ++k) {
    const WeightVector& xi = rs.positive_roots()[k];
    if (rs.height(xi) == 1) {
      sign[k] = 1;
      continue;
    }
    long long s = 0;
    for (int aidx = 0; aidx < k && s == 0; ++aidx) {
      WeightVector rest = xi - rs.positive_roots()[aidx];
      int bidx = rs.positive_root_index(rest);
      if (bidx < 0 || bidx <= aidx) continue;
      long long n_ab = st.structure_constant(rs.positive_roots()[aidx], rs.positive_roots()[bidx]);
      long long n_img = st.structure_constant(rs.positive_roots()[image[aidx]], rs.positive_roots()[image[bidx]]);
      if (n_img % n_ab != 0 || std::abs(n_img) != std::abs(n_ab))
        throw std::runtime_error("sign extension inconsistency at root pair " +
                                 rs.positive_roots()[aidx].str() + ", " +
                                 rs.positive_roots()[bidx].str());
      s = sign[aidx] * sign[bidx] * (n_img / n_ab);
    }
    if (s == 0) throw std::logic_error("positive root admits no decomposition");
    sign[k] = s;
  }

  // the map as a signed permutation of the basis
  std::vector<int> perm(n);
  std::vector<long long> sgn(n, 1);
  for (int k = 0; k < m; ++k) {
    perm[st.e_index(k)] = st.e_index(image[k]);
    sgn[st.e_index(k)] = sign[k];
    perm[st.f_index(k)] = st.f_index(image[k]);
    sgn[st.f_index(k)] = sign[k];
  }
  for (int i = 0; i < r; ++i) perm[st.h_index(i)] = st.h_index(d.node_permutation[i]);

  // exact verification that the extension preserves every bracket:
  // tau([b_i, b_j]) must equal [tau(b_i), tau(b_j)] termwise
  for (int i = 0; i < n; ++i) {
    for (const auto& [j, vec] : st.rows()[i]) {
      std::map<int, long long> lhs;
      for (const auto& [k, c] : vec) lhs[perm[k]] = sgn[k] * c;
      std::map<int, long long> rhs;
      for (const auto& [k, c] : st.bracket(perm[i], perm[j])) rhs[k] = sgn[i] * sgn[j] * c;
      if (lhs != rhs)
        throw std::runtime_error("bracket not preserved at basis pair " + st.basis_label(i) +
                                 ", " + st.basis_label(j));
    }
  }

  LinearMap tau(n, n);
  for (int k = 0; k < n; ++k) tau.at(perm[k], k) = rat_ll(sgn[k]);
  return tau;
}

Rat map_determinant(const LinearMap& m) { return m.det(); }

LinearMap exp_nilpotent(const StructureTable& st, const LinearMap& nmat) {
  int n = st.dim();
  if (nmat.rows() != n || nmat.cols() != n)
    throw std::invalid_argument("matrix dimension does not match the algebra");
  LinearMap acc = LinearMap::identity(n);
  LinearMap pow = LinearMap::identity(n);
  Rat fact(1);
  for (int k = 1; k <= n + 1; ++k) {
    pow = pow * nmat;
    if (pow.is_zero()) return acc;
    fact *= k;
    acc = acc + pow.scaled(1 / fact);
  }
  throw std::invalid_argument("matrix is not nilpotent within dim g steps");
}

}  // namespace dimdata
