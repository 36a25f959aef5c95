#include "dimdata/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dimdata {

long long EigenvalueMultiset::multiplicity(const Rat& v) const {
  auto [lo, hi] = std::equal_range(values.begin(), values.end(), v);
  return hi - lo;
}

bool EigenvalueMultiset::inversion_closed() const {
  std::multiset<Rat> s(values.begin(), values.end());
  for (const Rat& v : values)
    if (s.count(v) != s.count(1 / v)) return false;
  return true;
}

EigenvalueMultiset eigenvalues_through(const AdjointEmbedding& e, const TorusElement& t) {
  int r = e.h.rank();
  if (static_cast<int>(t.coords.size()) != r)
    throw std::invalid_argument("torus element rank mismatch");
  for (const Rat& c : t.coords)
    if (c == 0) throw std::invalid_argument("torus element has a zero coordinate");
  EigenvalueMultiset out;
  out.values.reserve(2 * e.restriction_columns.size());
  for (const WeightVector& col : e.restriction_columns) {
    Rat v(1);
    for (int i = 0; i < r; ++i) v *= rat_pow(t.coords[i], to_long(col.coords[i]));
    out.values.push_back(v);
    out.values.push_back(1 / v);
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

TorusElement sample_torus_element(int rank, std::uint64_t seed, std::uint64_t index) {
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  // splitmix64 over (seed, index); avoids distribution objects so the
  // stream is identical on every platform
  std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
  auto next = [&x]() {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  };
  TorusElement t;
  t.coords.reserve(rank);
  for (int i = 0; i < rank; ++i) {
    std::uint64_t r = next();
    long p = primes[r % 10];
    bool invert = ((r / 10) % 2) == 1;
    t.coords.push_back(invert ? Rat(1, p) : Rat(p));
  }
  return t;
}

LocalConjugacyReport local_conjugacy_check(const RootSystem& h, int samples, std::uint64_t seed) {
  if (samples < 0) throw std::invalid_argument("sample count must be nonnegative");
  AdjointEmbedding i = build_adjoint_embedding(h);
  AdjointEmbedding ip = twist_odd(i);
  LocalConjugacyReport rep;
  rep.type = h.type();
  rep.samples = samples;
  rep.seed = seed;
  for (int k = 0; k < samples; ++k) {
    TorusElement t = sample_torus_element(h.rank(), seed, static_cast<std::uint64_t>(k));
    EigenvalueMultiset mi = eigenvalues_through(i, t);
    EigenvalueMultiset mp = eigenvalues_through(ip, t);
    if (!(mi == mp) || !mi.inversion_closed()) ++rep.failures;
    long long m1 = mi.multiplicity(Rat(1));
    if (rep.min_one_multiplicity < 0 || m1 < rep.min_one_multiplicity)
      rep.min_one_multiplicity = m1;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// explicit orthogonal elements

Mat<GaussRat> hyperbolic_gram(int two_n) {
  if (two_n % 2 != 0) throw std::invalid_argument("hyperbolic form needs even dimension");
  Mat<GaussRat> s(two_n, two_n);
  for (int k = 0; k < two_n / 2; ++k) {
    s.at(2 * k, 2 * k + 1) = GaussRat(1);
    s.at(2 * k + 1, 2 * k) = GaussRat(1);
  }
  return s;
}

bool preserves_hyperbolic_form(const Mat<GaussRat>& m) {
  Mat<GaussRat> s = hyperbolic_gram(m.rows());
  return m.transpose() * s * m == s;
}

OrthogonalElement diagonal_element(const std::vector<GaussRat>& pair_values) {
  int n = static_cast<int>(pair_values.size());
  OrthogonalElement e;
  e.matrix = Mat<GaussRat>(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    if (pair_values[k].is_zero()) throw std::invalid_argument("diagonal entries must be nonzero");
    GaussRat inv = GaussRat(1) / pair_values[k];
    e.matrix.at(2 * k, 2 * k) = pair_values[k];
    e.matrix.at(2 * k + 1, 2 * k + 1) = inv;
    e.spectrum.push_back(pair_values[k]);
    e.spectrum.push_back(inv);
  }
  return e;
}

OrthogonalElement odd_swap(int two_n) {
  OrthogonalElement e;
  e.matrix = Mat<GaussRat>::identity(two_n);
  e.matrix.at(0, 0) = GaussRat(0);
  e.matrix.at(1, 1) = GaussRat(0);
  e.matrix.at(0, 1) = GaussRat(1);
  e.matrix.at(1, 0) = GaussRat(1);
  e.spectrum.assign(two_n, GaussRat(1));
  e.spectrum[0] = GaussRat(Rat(-1));
  return e;
}

OrthogonalElement conjugate_element(const OrthogonalElement& a, const Mat<GaussRat>& c) {
  if (!preserves_hyperbolic_form(c))
    throw std::invalid_argument("conjugator does not preserve the form");
  OrthogonalElement out;
  out.matrix = c.inverse() * a.matrix * c;
  out.spectrum = a.spectrum;
  return out;
}

OrthogonalElement torus_image_element(const AdjointEmbedding& e, const TorusElement& t) {
  int r = e.h.rank();
  if (static_cast<int>(t.coords.size()) != r)
    throw std::invalid_argument("torus element rank mismatch");
  std::vector<GaussRat> vals;
  for (const WeightVector& col : e.restriction_columns) {
    Rat v(1);
    for (int i = 0; i < r; ++i) v *= rat_pow(t.coords[i], to_long(col.coords[i]));
    vals.emplace_back(v);
  }
  return diagonal_element(vals);
}

std::string conj_verdict_name(ConjVerdict v) {
  switch (v) {
    case ConjVerdict::SO_CONJUGATE: return "SO_CONJUGATE";
    case ConjVerdict::O_ONLY: return "O_ONLY";
    case ConjVerdict::NOT_O_CONJUGATE: return "NOT_O_CONJUGATE";
  }
  return "?";
}

namespace {

using GMat = Mat<GaussRat>;
using GVec = std::vector<GaussRat>;

GaussRat dot_form(const GMat& s, const GVec& x, const GVec& y) {
  GaussRat acc(0);
  int n = s.rows();
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j)
      if (!y[j].is_zero() && !s.at(i, j).is_zero()) acc += x[i] * s.at(i, j) * y[j];
  }
  return acc;
}

std::vector<GVec> eigenspace(const GMat& a, const GaussRat& lambda) {
  GMat m = a;
  for (int i = 0; i < m.rows(); ++i) m.at(i, i) -= lambda;
  return m.kernel_basis();
}

// Hyperbolic-pair basis (w_1, z_1, w_2, z_2, ...) of a nondegenerate
// symmetric form on the span of `basis`, by greedy isotropic search over
// Q(i). Throws when no isotropic vector can be certified in the base field.
std::vector<GVec> hyperbolic_pairs(const GMat& s, std::vector<GVec> basis) {
  std::vector<GVec> out;
  while (!basis.empty()) {
    if (basis.size() == 1)
      throw std::domain_error(
          "odd-dimensional +-1 eigenspace: element outside SO(2N) is unsupported");
    size_t k = basis.size();
    // find an isotropic vector in the span
    GVec w;
    for (size_t i = 0; i < k && w.empty(); ++i)
      if (dot_form(s, basis[i], basis[i]).is_zero()) w = basis[i];
    for (size_t i = 0; i < k && w.empty(); ++i) {
      for (size_t j = i + 1; j < k && w.empty(); ++j) {
        // q(x + t y) = 0: t = (-S(x,y) +- sqrt(S(x,y)^2 - q(x) q(y))) / q(y)
        GaussRat qx = dot_form(s, basis[i], basis[i]);
        GaussRat qy = dot_form(s, basis[j], basis[j]);
        GaussRat sxy = dot_form(s, basis[i], basis[j]);
        auto disc = gauss_sqrt(sxy * sxy - qx * qy);
        if (!disc) continue;
        GaussRat t = (-sxy + *disc) / qy;
        GVec cand = basis[i];
        for (size_t p = 0; p < cand.size(); ++p) cand[p] += t * basis[j][p];
        bool nonzero = false;
        for (const GaussRat& c : cand)
          if (!c.is_zero()) { nonzero = true; break; }
        if (nonzero && dot_form(s, cand, cand).is_zero()) w = cand;
      }
    }
    if (w.empty())
      throw std::domain_error(
          "eigenspace form admits no isotropic vector over Q(i); element unsupported");

    // complete w to a hyperbolic pair (w, z): S(w,z) = 1, q(z) = 0
    GVec z;
    for (const GVec& v : basis) {
      if (!dot_form(s, w, v).is_zero()) { z = v; break; }
    }
    if (z.empty()) throw std::logic_error("degenerate eigenspace form");
    GaussRat swz = dot_form(s, w, z);
    GaussRat qz = dot_form(s, z, z);
    GaussRat corr = qz / (GaussRat(2) * swz);
    for (size_t p = 0; p < z.size(); ++p) z[p] -= corr * w[p];
    swz = dot_form(s, w, z);
    for (GaussRat& c : z) c /= swz;
    out.push_back(w);
    out.push_back(z);

    // project the rest onto the orthogonal complement of (w, z)
    std::vector<GVec> projected;
    for (const GVec& v : basis) {
      GaussRat cz = dot_form(s, v, z);   // coefficient along w
      GaussRat cw = dot_form(s, v, w);   // coefficient along z
      GVec u = v;
      for (size_t p = 0; p < u.size(); ++p) u[p] -= cz * w[p] + cw * z[p];
      projected.push_back(std::move(u));
    }
    // extract a basis of the complement
    int dim = static_cast<int>(w.size());
    GMat stack(static_cast<int>(projected.size()), dim);
    for (size_t r = 0; r < projected.size(); ++r)
      for (int c = 0; c < dim; ++c) stack.at(static_cast<int>(r), c) = projected[r][c];
    GMat reduced = stack;
    std::vector<int> pivots = reduced.rref();
    if (pivots.size() != k - 2) throw std::logic_error("hyperbolic reduction lost dimensions");
    std::vector<GVec> next;
    for (size_t r = 0; r < pivots.size(); ++r) {
      GVec v(dim, GaussRat(0));
      for (int c = 0; c < dim; ++c) v[c] = reduced.at(static_cast<int>(r), c);
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  return out;
}

struct EigenClass {
  GaussRat rep;                 // canonical representative (min of lambda, 1/lambda)
  bool self_paired;             // rep in {1, -1}
  std::vector<GVec> frame;      // interleaved hyperbolic pairs (u_i, v_i)
};

// Exact verification of a claimed spectrum: each eigenspace dimension must
// match the claimed multiplicity and together they must exhaust the space.
std::map<GaussRat, std::vector<GVec>> verified_eigenspaces(const OrthogonalElement& elem) {
  const GMat& a = elem.matrix;
  int n = a.rows();
  std::map<GaussRat, int> mult;
  for (const GaussRat& v : elem.spectrum) {
    if (v.is_zero()) throw std::invalid_argument("orthogonal element with zero eigenvalue");
    ++mult[v];
  }
  int total = 0;
  std::map<GaussRat, std::vector<GVec>> spaces;
  for (const auto& [lam, m] : mult) {
    std::vector<GVec> ker = eigenspace(a, lam);
    if (static_cast<int>(ker.size()) != m) {
      std::ostringstream os;
      os << "claimed eigenvalue " << gauss_to_string(lam) << " has eigenspace dimension "
         << ker.size() << ", multiplicity " << m
         << "; element not diagonalizable over the base field";
      throw std::domain_error(os.str());
    }
    total += m;
    spaces[lam] = std::move(ker);
  }
  if (total != n)
    throw std::domain_error("spectrum does not exhaust the space; eigenvalue outside Q(i)?");
  return spaces;
}

// S-adapted frame from verified eigenspaces: ordered hyperbolic pairs
// grouped by eigenvalue class, Gram exactly Diag(P,...,P).
std::vector<EigenClass> adapted_frame(const std::map<GaussRat, std::vector<GVec>>& spaces,
                                      const GMat& s, int n) {
  std::vector<EigenClass> classes;
  std::set<GaussRat> done;
  for (const auto& [lam, vecs] : spaces) {
    if (done.count(lam)) continue;
    GaussRat inv = GaussRat(1) / lam;
    EigenClass cls;
    cls.self_paired = (inv == lam);
    cls.rep = std::min(lam, inv);
    done.insert(lam);
    if (cls.self_paired) {
      cls.frame = hyperbolic_pairs(s, vecs);
    } else {
      auto it = spaces.find(inv);
      if (it == spaces.end() || it->second.size() != vecs.size())
        throw std::domain_error("spectrum is not closed under inversion");
      done.insert(inv);
      const std::vector<GVec>& u = (lam < inv) ? vecs : it->second;
      const std::vector<GVec>& vpre = (lam < inv) ? it->second : vecs;
      // dual basis: S(u_i, v_j) = delta_ij
      int k = static_cast<int>(u.size());
      GMat g(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g.at(i, j) = dot_form(s, u[i], vpre[j]);
      GMat ginv = g.inverse();
      for (int i = 0; i < k; ++i) {
        cls.frame.push_back(u[i]);
        GVec v(n, GaussRat(0));
        for (int q = 0; q < k; ++q)
          for (int p = 0; p < n; ++p) v[p] += vpre[q][p] * ginv.at(q, i);
        cls.frame.push_back(std::move(v));
      }
    }
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const EigenClass& x, const EigenClass& y) { return x.rep < y.rep; });
  return classes;
}

GMat frame_matrix(const std::vector<EigenClass>& classes, int n) {
  GMat t(n, n);
  int col = 0;
  for (const EigenClass& cls : classes)
    for (const GVec& v : cls.frame) {
      for (int i = 0; i < n; ++i) t.at(i, col) = v[i];
      ++col;
    }
  if (col != n) throw std::logic_error("frame does not span");
  return t;
}

}  // namespace

ConjugacyResult decide_so_conjugacy(const OrthogonalElement& a, const OrthogonalElement& b) {
  int n = a.matrix.rows();
  if (b.matrix.rows() != n) throw std::invalid_argument("elements of different sizes");
  if (n % 2 != 0) throw std::invalid_argument("odd dimension");
  if (!preserves_hyperbolic_form(a.matrix) || !preserves_hyperbolic_form(b.matrix))
    throw std::invalid_argument("input does not preserve the hyperbolic form");
  if (a.spectrum.empty() || b.spectrum.empty())
    throw std::domain_error("element carries no spectrum; unsupported");

  auto spaces_a = verified_eigenspaces(a);
  auto spaces_b = verified_eigenspaces(b);

  std::multiset<GaussRat> sa(a.spectrum.begin(), a.spectrum.end());
  std::multiset<GaussRat> sb(b.spectrum.begin(), b.spectrum.end());
  if (sa != sb) return {ConjVerdict::NOT_O_CONJUGATE, std::nullopt};

  GMat s = hyperbolic_gram(n);
  std::vector<EigenClass> fa = adapted_frame(spaces_a, s, n);
  std::vector<EigenClass> fb = adapted_frame(spaces_b, s, n);
  GMat ta = frame_matrix(fa, n);
  GMat tb = frame_matrix(fb, n);
  GMat c = ta * tb.inverse();

  GaussRat det = c.det();
  bool odd = (det == GaussRat(Rat(-1)));
  if (!odd && det != GaussRat(1)) throw std::logic_error("frame conjugator determinant not +-1");

  if (odd) {
    // correct by an odd element of the centralizer: swap one hyperbolic
    // pair inside a +-1 eigenspace of a
    const EigenClass* fix = nullptr;
    for (const EigenClass& cls : fa)
      if (cls.self_paired && !cls.frame.empty()) { fix = &cls; break; }
    if (fix == nullptr) return {ConjVerdict::O_ONLY, std::nullopt};
    GMat e = GMat::identity(n);
    // locate the column offset of the chosen pair inside the frame
    int off = 0;
    for (const EigenClass& cls : fa) {
      if (&cls == fix) break;
      off += static_cast<int>(cls.frame.size());
    }
    e.at(off, off) = GaussRat(0);
    e.at(off + 1, off + 1) = GaussRat(0);
    e.at(off, off + 1) = GaussRat(1);
    e.at(off + 1, off) = GaussRat(1);
    GMat q = ta * e * ta.inverse();
    c = q * c;
  }

  // exact verification of the witness
  if (!preserves_hyperbolic_form(c)) throw std::logic_error("witness does not preserve the form");
  if (c.det() != GaussRat(1)) throw std::logic_error("witness determinant is not 1");
  if (!(c.inverse() * a.matrix * c == b.matrix))
    throw std::logic_error("witness does not conjugate a to b");
  return {ConjVerdict::SO_CONJUGATE, c};
}

// ---------------------------------------------------------------------------
// commutant

std::vector<SparseMat> adjoint_rep_matrices(const StructureTable& st) {
  std::vector<SparseMat> mats;
  mats.reserve(st.dim());
  for (int i = 0; i < st.dim(); ++i) mats.push_back(adjoint_matrix_sparse(st, i));
  return mats;
}

namespace {

bool is_diagonal(const SparseMat& m) {
  for (int i = 0; i < m.rows; ++i)
    for (const auto& [j, v] : m.row[i])
      if (j != i) return false;
  return true;
}

long long commutant_blocked(const StructureTable& st, const std::vector<SparseMat>& mats,
                            const std::vector<int>& block_of, int num_blocks) {
  int m = mats[0].rows;
  std::vector<std::vector<int>> members(num_blocks);
  for (int i = 0; i < m; ++i) members[block_of[i]].push_back(i);

  // unknown X[p][q] exists only for block_of[p] == block_of[q]
  long long num_unknowns = 0;
  std::map<std::pair<int, int>, int> unknown_id;
  for (int p = 0; p < m; ++p)
    for (int q : members[block_of[p]]) unknown_id[{p, q}] = static_cast<int>(num_unknowns++);

  SparseEliminator elim(static_cast<int>(num_unknowns));

  // constraints from the simple e and f images; combined with the Cartan
  // blocking they force commutation with the whole image
  std::vector<int> gens;
  const RootSystem& rs = st.root_system();
  for (int i = 0; i < rs.rank(); ++i) {
    int k = rs.positive_root_index(rs.simple_roots()[i]);
    gens.push_back(st.e_index(k));
    gens.push_back(st.f_index(k));
  }

  for (int g : gens) {
    const SparseMat& amat = mats[g];
    // rows of (XA - AX) = 0, assembled cell by cell
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> cells;
    for (int p = 0; p < m; ++p)
      for (int r : members[block_of[p]])
        for (const auto& [q, v] : amat.row[r])
          cells[{p, q}].emplace_back(unknown_id[{p, r}], v);
    for (int p = 0; p < m; ++p)
      for (const auto& [r, v] : amat.row[p])
        for (int q : members[block_of[r]])
          cells[{p, q}].emplace_back(unknown_id[{r, q}], -v);
    for (auto& [cell, terms] : cells) elim.add_row(std::move(terms));
  }
  return elim.nullity();
}

}  // namespace

long long commutant_dimension(const StructureTable& st, const std::vector<SparseMat>& mats) {
  if (static_cast<int>(mats.size()) != st.dim())
    throw std::invalid_argument("rep matrices must be aligned with the structure-table basis");
  int m = mats[0].rows;
  for (const SparseMat& mat : mats)
    if (mat.rows != m || mat.cols != m)
      throw std::invalid_argument("rep matrices of inconsistent sizes");

  // Cartan images are commuting semisimple operators; when they are
  // diagonal the joint eigenspaces are read off coordinatewise
  bool cartan_diagonal = true;
  for (int i = 0; i < st.rank() && cartan_diagonal; ++i)
    cartan_diagonal = is_diagonal(mats[st.h_index(i)]);

  if (cartan_diagonal) {
    std::map<std::vector<Rat>, int> block_key;
    std::vector<int> block_of(m);
    for (int col = 0; col < m; ++col) {
      std::vector<Rat> key(st.rank(), Rat(0));
      for (int i = 0; i < st.rank(); ++i) {
        const SparseMat& h = mats[st.h_index(i)];
        for (const auto& [j, v] : h.row[col])
          if (j == col) key[i] = v;
      }
      auto [it, fresh] = block_key.emplace(std::move(key), static_cast<int>(block_key.size()));
      block_of[col] = it->second;
    }
    return commutant_blocked(st, mats, block_of, static_cast<int>(block_key.size()));
  }

  // general small-dimension path: no blocking, all generators as
  // constraints over the full matrix space
  if (m > 128)
    throw std::invalid_argument("non-diagonal Cartan images only supported in small dimension");
  long long nullity = 0;
  {
    SparseEliminator elim(m * m);
    for (const SparseMat& amat : mats) {
      std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> cells;
      for (int p = 0; p < m; ++p)
        for (int r = 0; r < m; ++r)
          for (const auto& [q, v] : amat.row[r])
            cells[{p, q}].emplace_back(p * m + r, v);
      for (int p = 0; p < m; ++p)
        for (const auto& [r, v] : amat.row[p])
          for (int q = 0; q < m; ++q)
            cells[{p, q}].emplace_back(r * m + q, -v);
      for (auto& [cell, terms] : cells) elim.add_row(std::move(terms));
    }
    nullity = elim.nullity();
  }
  return nullity;
}

long long commutant_dimension(const StructureTable& st, const std::vector<Mat<Rat>>& rep_matrices) {
  std::vector<SparseMat> sparse;
  sparse.reserve(rep_matrices.size());
  for (const Mat<Rat>& d : rep_matrices) {
    SparseMat s(d.rows(), d.cols());
    for (int i = 0; i < d.rows(); ++i)
      for (int j = 0; j < d.cols(); ++j)
        if (d.at(i, j) != 0) s.add(i, j, d.at(i, j));
    s.sort_rows();
    sparse.push_back(std::move(s));
  }
  return commutant_dimension(st, sparse);
}

// ---------------------------------------------------------------------------
// obstruction report

ObstructionReport obstruction_report(const SimpleType& h_type) {
  validate(h_type);
  ObstructionReport rep;
  rep.type = h_type;

  auto fail = [&rep](const std::string& name) {
    rep.obstructed = false;
    rep.failing = name;
  };

  ObstructionIngredient a{"rank_even", true, h_type.rank % 2 == 0,
                          "rank " + std::to_string(h_type.rank)};
  rep.ingredients.push_back(a);
  if (!a.pass) {
    fail(a.name);
    return rep;
  }

  const RootSystem& rs = RootSystem::shared(h_type);
  auto autos = rs.diagram_automorphisms();
  bool all_even = true;
  for (const auto& d : autos)
    if (d.parity != 1) all_even = false;
  ObstructionIngredient b{"diagram_automorphisms_even", true, all_even,
                          std::to_string(autos.size()) + " automorphisms"};
  rep.ingredients.push_back(b);
  if (!all_even) {
    fail(b.name);
    return rep;
  }

  StructureTable st = make_structure_table(rs);
  bool dets_one = true;
  for (const auto& d : autos) {
    LinearMap tau = induced_automorphism(st, d);
    Rat det = map_determinant(tau);
    if (det != d.parity)
      throw std::logic_error("induced automorphism determinant differs from diagram parity");
    if (det != 1) dets_one = false;
  }
  ObstructionIngredient c{"induced_automorphism_determinants_one", true, dets_one, ""};
  rep.ingredients.push_back(c);
  if (!dets_one) {
    fail(c.name);
    return rep;
  }

  long long cd = commutant_dimension(st, adjoint_rep_matrices(st));
  ObstructionIngredient d{"adjoint_commutant_trivial", true, cd == 1,
                          "dimension " + std::to_string(cd)};
  rep.ingredients.push_back(d);
  if (cd != 1) {
    fail(d.name);
    return rep;
  }

  // the twist element swaps one hyperbolic pair: a transposition, so its
  // determinant is -1, and it preserves Diag(P,...,P) since P is the swap
  // itself; verified structurally to avoid dense arithmetic at this size
  int two_n = st.dim();
  std::vector<int> swap_perm(two_n);
  for (int i = 0; i < two_n; ++i) swap_perm[i] = i;
  std::swap(swap_perm[0], swap_perm[1]);
  bool odd = permutation_sign(swap_perm) == -1;
  for (int k = 0; k < two_n / 2 && odd; ++k) {
    // S[q(i)][q(j)] must equal S[i][j] on the nonzero pattern of S
    int i = 2 * k, j = 2 * k + 1;
    odd = (swap_perm[i] / 2 == swap_perm[j] / 2) && (swap_perm[i] != swap_perm[j]);
  }
  ObstructionIngredient e{"twist_element_odd", true, odd, "det -1 swap of one hyperbolic pair"};
  rep.ingredients.push_back(e);
  if (!odd) {
    fail(e.name);
    return rep;
  }

  rep.obstructed = true;
  return rep;
}

}  // namespace dimdata
