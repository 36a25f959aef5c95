#include <cstdlib>

#include "dimdata/cache.hpp"
#include "dimdata/liealg.hpp"
#include "doctest.h"

using namespace dimdata;

namespace {

SparseVec basis_vec(int i) { return {{i, 1}}; }

bool jacobi_holds(const StructureTable& st) {
  int n = st.dim();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        SparseVec t1 = st.bracket_vectors(basis_vec(x), st.bracket(y, z));
        SparseVec t2 = st.bracket_vectors(basis_vec(y), st.bracket(z, x));
        SparseVec t3 = st.bracket_vectors(basis_vec(z), st.bracket(x, y));
        std::map<int, long long> acc;
        for (const auto& [k, c] : t1) acc[k] += c;
        for (const auto& [k, c] : t2) acc[k] += c;
        for (const auto& [k, c] : t3) acc[k] += c;
        for (const auto& [k, c] : acc)
          if (c != 0) return false;
      }
  return true;
}

bool antisymmetric(const StructureTable& st) {
  int n = st.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::map<int, long long> acc;
      for (const auto& [k, c] : st.bracket(i, j)) acc[k] += c;
      for (const auto& [k, c] : st.bracket(j, i)) acc[k] += c;
      for (const auto& [k, c] : acc)
        if (c != 0) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("sl2 relations") {
  RootSystem a1 = RootSystem::build({Family::A, 1});
  StructureTable st = StructureTable::build(a1);
  REQUIRE(st.dim() == 3);
  int e = st.e_index(0), f = st.f_index(0), h = st.h_index(0);
  CHECK(st.bracket(h, e) == SparseVec{{e, 2}});
  CHECK(st.bracket(h, f) == SparseVec{{f, -2}});
  CHECK(st.bracket(e, f) == SparseVec{{h, 1}});
  CHECK(st.bracket(e, e).empty());
}

TEST_CASE("B2 table: dimension, antisymmetry, Jacobi on all triples") {
  StructureTable st = StructureTable::build(RootSystem::build({Family::B, 2}));
  CHECK(st.dim() == 10);
  CHECK(antisymmetric(st));
  CHECK(jacobi_holds(st));
}

TEST_CASE("A4 and G2 and D4 tables satisfy Jacobi exactly") {
  StructureTable a4 = StructureTable::build(RootSystem::build({Family::A, 4}));
  CHECK(a4.dim() == 24);
  CHECK(jacobi_holds(a4));

  StructureTable g2 = StructureTable::build(RootSystem::build({Family::G, 2}));
  CHECK(g2.dim() == 14);
  CHECK(jacobi_holds(g2));

  StructureTable d4 = StructureTable::build(RootSystem::build({Family::D, 4}));
  CHECK(d4.dim() == 28);
  CHECK(jacobi_holds(d4));
}

TEST_CASE("Chevalley basis size matches the root-count dimension") {
  for (const char* name : {"A1", "A3", "B2", "C3", "D4", "G2", "F4", "E6"}) {
    RootSystem rs = RootSystem::build(SimpleType::parse(name));
    StructureTable st = StructureTable::build(rs);
    CHECK(st.dim() == rs.dim_lie_algebra());
  }
}

TEST_CASE("cartan action reproduces cartan integers") {
  StructureTable st = StructureTable::build(RootSystem::build({Family::C, 3}));
  const RootSystem& rs = st.root_system();
  for (int i = 0; i < rs.rank(); ++i)
    for (int k = 0; k < st.num_positive(); ++k) {
      long long expect = to_long(rs.positive_roots()[k].coords[i]);
      SparseVec v = st.bracket(st.h_index(i), st.e_index(k));
      long long got = v.empty() ? 0 : v[0].second;
      CHECK(got == expect);
    }
}

TEST_CASE("G2 structure constants have |N| in {1,2,3}") {
  StructureTable st = StructureTable::build(RootSystem::build({Family::G, 2}));
  const RootSystem& rs = st.root_system();
  bool saw2 = false, saw3 = false;
  for (const WeightVector& a : rs.roots())
    for (const WeightVector& b : rs.roots()) {
      WeightVector s = a + b;
      if (!rs.is_root(s)) continue;
      long long n = std::abs(st.structure_constant(a, b));
      CHECK(n >= 1);
      CHECK(n <= 3);
      if (n == 2) saw2 = true;
      if (n == 3) saw3 = true;
    }
  CHECK(saw2);
  CHECK(saw3);
}

TEST_CASE("adjoint matrices") {
  RootSystem a1 = RootSystem::build({Family::A, 1});
  StructureTable st = StructureTable::build(a1);

  std::vector<Rat> h_coeff(3, Rat(0));
  h_coeff[st.h_index(0)] = 1;
  LinearMap ad_h = adjoint_matrix(st, h_coeff);
  CHECK(ad_h.at(st.e_index(0), st.e_index(0)) == 2);
  CHECK(ad_h.at(st.f_index(0), st.f_index(0)) == -2);
  CHECK(ad_h.at(st.h_index(0), st.h_index(0)) == 0);

  LinearMap zero = adjoint_matrix(st, std::vector<Rat>(3, Rat(0)));
  CHECK(zero.is_zero());

  // linearity
  std::vector<Rat> x(3, Rat(0)), y(3, Rat(0));
  x[st.e_index(0)] = Rat(2, 3);
  y[st.f_index(0)] = Rat(5);
  std::vector<Rat> sum = x;
  sum[st.f_index(0)] = y[st.f_index(0)];
  CHECK(adjoint_matrix(st, x) + adjoint_matrix(st, y) == adjoint_matrix(st, sum));
}

TEST_CASE("B2: ad of a simple root vector is nilpotent of order at most 5") {
  StructureTable st = StructureTable::build(RootSystem::build({Family::B, 2}));
  for (int k = 0; k < 2; ++k) {
    std::vector<Rat> x(st.dim(), Rat(0));
    x[st.e_index(k)] = 1;
    LinearMap m = adjoint_matrix(st, x);
    LinearMap p = m * m * m * m * m;
    CHECK(p.is_zero());
  }
}

TEST_CASE("killing form") {
  RootSystem a1 = RootSystem::build({Family::A, 1});
  StructureTable st1 = StructureTable::build(a1);
  BilinearForm k1 = killing_form(st1);
  CHECK(k1.at(st1.h_index(0), st1.h_index(0)) == 8);

  StructureTable st = StructureTable::build(RootSystem::build({Family::B, 2}));
  BilinearForm gram = killing_form(st);
  CHECK(gram == gram.transpose());
  CHECK(gram.det() != 0);

  // root-space orthogonality: kappa(e_beta, e_gamma) = 0 unless gamma = -beta
  int m = st.num_positive();
  for (int a = 0; a < 2 * m; ++a)
    for (int b = 0; b < 2 * m; ++b) {
      bool opposite = (a % m == b % m) && (a != b);
      if (!opposite) CHECK(gram.at(a, b) == 0);
      else CHECK(gram.at(a, b) != 0);
    }

  // ad-invariance on all basis triples: kappa([x,y],z) + kappa(y,[x,z]) = 0
  int n = st.dim();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Rat lhs(0);
        for (const auto& [k, c] : st.bracket(x, y)) lhs += rat_ll(c) * gram.at(k, z);
        for (const auto& [k, c] : st.bracket(x, z)) lhs += rat_ll(c) * gram.at(y, k);
        CHECK(lhs == 0);
      }
}

TEST_CASE("induced automorphisms: determinant equals diagram parity") {
  for (const char* name : {"A2", "A3", "A4", "D4", "D5", "E6"}) {
    RootSystem rs = RootSystem::build(SimpleType::parse(name));
    StructureTable st = StructureTable::build(rs);
    CAPTURE(name);
    for (const DiagramAutomorphism& d : rs.diagram_automorphisms()) {
      LinearMap tau = induced_automorphism(st, d);
      if (d.is_identity()) CHECK(tau == LinearMap::identity(st.dim()));
      CHECK(map_determinant(tau) == Rat(d.parity));
      // lies in O(g, kappa): tau^T gram tau = gram
      BilinearForm gram = killing_form(st);
      CHECK(tau.transpose() * gram * tau == gram);
    }
  }
}

TEST_CASE("induced automorphism rejects a non-automorphism") {
  RootSystem a3 = RootSystem::build({Family::A, 3});
  StructureTable st = StructureTable::build(a3);
  DiagramAutomorphism bad{{1, 0, 2}, -1};  // swaps an end with the middle
  CHECK_THROWS_AS(induced_automorphism(st, bad), std::invalid_argument);
}

TEST_CASE("structure tables round-trip through the disk cache unchanged") {
  std::string dir = "/tmp/dimdata-cache-unit";
  REQUIRE(std::system(("rm -rf " + dir).c_str()) == 0);
  cache::configure(true, dir);
  RootSystem g2 = RootSystem::build({Family::G, 2});
  StructureTable fresh = StructureTable::build(g2);
  StructureTable stored = cache::structure_table(g2);   // builds and writes
  StructureTable loaded = cache::structure_table(g2);   // reads back
  cache::configure(false, std::nullopt);
  for (int i = 0; i < fresh.dim(); ++i)
    for (int j = 0; j < fresh.dim(); ++j) {
      CHECK(stored.bracket(i, j) == fresh.bracket(i, j));
      CHECK(loaded.bracket(i, j) == fresh.bracket(i, j));
    }
  CHECK(loaded.constants() == fresh.constants());
}

TEST_CASE("exp of nilpotent maps") {
  StructureTable st = StructureTable::build(RootSystem::build({Family::A, 1}));
  int n = st.dim();

  CHECK(exp_nilpotent(st, LinearMap(n, n)) == LinearMap::identity(n));

  std::vector<Rat> x(n, Rat(0));
  x[st.e_index(0)] = 1;
  LinearMap u = exp_nilpotent(st, adjoint_matrix(st, x));
  CHECK(map_determinant(u) == 1);
  // unipotent and triangular with respect to the (e, h, f) order
  int order[3] = {st.e_index(0), st.h_index(0), st.f_index(0)};
  for (int i = 0; i < 3; ++i) {
    CHECK(u.at(order[i], order[i]) == 1);
    for (int j = 0; j < i; ++j) CHECK(u.at(order[i], order[j]) == 0);
  }

  // non-nilpotent input is rejected
  std::vector<Rat> hh(n, Rat(0));
  hh[st.h_index(0)] = 1;
  CHECK_THROWS_AS(exp_nilpotent(st, adjoint_matrix(st, hh)), std::invalid_argument);

  // exp(ad e_beta) preserves kappa exactly for every root of B2
  StructureTable b2 = StructureTable::build(RootSystem::build({Family::B, 2}));
  BilinearForm gram = killing_form(b2);
  for (int k = 0; k < 2 * b2.num_positive(); ++k) {
    std::vector<Rat> v(b2.dim(), Rat(0));
    v[k] = 1;
    LinearMap g = exp_nilpotent(b2, adjoint_matrix(b2, v));
    CHECK(g.transpose() * gram * g == gram);
    CHECK(map_determinant(g) == 1);
  }
}
