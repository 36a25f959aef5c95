#include <algorithm>
#include <atomic>
#include <thread>

#include "dimdata/repchar.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dimdata;

namespace {
WeightVector wv(std::vector<long> v) { return WeightVector::from_ints(v); }
}

TEST_CASE("weyl dimension formula") {
  RootSystem b2 = RootSystem::build({Family::B, 2});
  CHECK(weyl_dimension(b2, b2.highest_root()) == 10);
  CHECK(weyl_dimension(b2, WeightVector(2)) == 1);

  RootSystem a1 = RootSystem::build({Family::A, 1});
  CHECK(weyl_dimension(a1, wv({3})) == 4);

  RootSystem g2 = RootSystem::build({Family::G, 2});
  CHECK(weyl_dimension(g2, WeightVector(2)) == 1);
  CHECK(weyl_dimension(g2, g2.highest_root()) == 14);

  CHECK_THROWS_AS(weyl_dimension(a1, wv({-1})), std::invalid_argument);
  CHECK_THROWS_AS(weyl_dimension(a1, WeightVector({std::vector<Rat>{Rat(1, 2)}})),
                  std::invalid_argument);
}

TEST_CASE("irreducible characters by Freudenthal") {
  RootSystem b2 = RootSystem::build({Family::B, 2});
  Character adj = Character::irreducible(b2, b2.highest_root());
  CHECK(adj == Character::adjoint(b2));
  CHECK(adj.multiplicity(WeightVector(2)) == 2);  // zero weight: rank
  for (const WeightVector& r : b2.roots()) CHECK(adj.multiplicity(r) == 1);
  CHECK(adj.dimension() == 10);
  CHECK(adj.is_weyl_invariant());

  RootSystem d5 = RootSystem::build({Family::D, 5});
  Character vec = Character::irreducible(d5, wv({1, 0, 0, 0, 0}));
  CHECK(vec.dimension() == 10);
  CHECK(vec.terms().size() == 10);
  for (const auto& [w, m] : vec.terms()) CHECK(m == 1);

  RootSystem a1 = RootSystem::build({Family::A, 1});
  Character sym3 = Character::irreducible(a1, wv({3}));
  CHECK(sym3.terms().size() == 4);
  for (long k : {3L, 1L, -1L, -3L}) CHECK(sym3.multiplicity(wv({k})) == 1);

  // dimension consistency across a grid
  for (const char* name : {"B2", "G2", "A2"}) {
    RootSystem rs = RootSystem::build(SimpleType::parse(name));
    for (long a = 0; a <= 2; ++a)
      for (long b = 0; b <= 2; ++b) {
        Character c = Character::irreducible(rs, wv({a, b}));
        CHECK(c.dimension() == weyl_dimension(rs, wv({a, b})));
        CHECK(c.is_weyl_invariant());
      }
  }
}

TEST_CASE("tensor products") {
  RootSystem b2 = RootSystem::build({Family::B, 2});
  Character adj = Character::adjoint(b2);
  CHECK(adj.tensor(Character::trivial(b2)) == adj);
  CHECK(adj.tensor(adj).dimension() == 100);

  RootSystem a1 = RootSystem::build({Family::A, 1});
  Character std2 = Character::irreducible(a1, wv({1}));
  Character sq = std2.tensor(std2);
  CHECK(sq.multiplicity(wv({2})) == 1);
  CHECK(sq.multiplicity(wv({0})) == 2);
  CHECK(sq.multiplicity(wv({-2})) == 1);

  RootSystem a2 = RootSystem::build({Family::A, 2});
  CHECK_THROWS_AS(Character::trivial(a2).tensor(Character::trivial(a1)), std::invalid_argument);
}

TEST_CASE("decompose: round trips, invariant form multiplicity, errors") {
  RootSystem b2 = RootSystem::build({Family::B, 2});
  Character adj = Character::adjoint(b2);

  Decomposition single = decompose(adj);
  REQUIRE(single.summands.size() == 1);
  CHECK(single.multiplicity(b2.highest_root()) == 1);

  // unique invariant bilinear form on an irreducible selfdual
  Decomposition sq = decompose(adj.tensor(adj));
  CHECK(sq.trivial_multiplicity() == 1);
  CHECK(rebuild(b2, sq) == adj.tensor(adj));

  // the adjoint sits once inside its own alternating square
  auto [sym, alt] = adj.sym2_alt2();
  Decomposition dalt = decompose(alt);
  CHECK(dalt.multiplicity(b2.highest_root()) == 1);
  CHECK(rebuild(b2, dalt) == alt);

  // malformed inputs
  Character not_invariant(b2, {{wv({1, 0}), 1}});
  CHECK_THROWS_AS(decompose(not_invariant), std::domain_error);
  Character negative(b2, {{wv({0, 0}), -1}});
  CHECK_THROWS_AS(decompose(negative), std::domain_error);
}

TEST_CASE("decompose agrees with the alternating-sum and evaluation oracles") {
  for (const char* name : {"B2", "G2"}) {
    RootSystem rs = RootSystem::build(SimpleType::parse(name));
    auto weyl = oracles::weyl_group(rs);
    CHECK(weyl.size() == (std::string(name) == "B2" ? 8 : 12));

    Character adj = Character::adjoint(rs);
    std::vector<Character> inputs;
    inputs.push_back(adj.tensor(adj));
    inputs.push_back(adj.sym2_alt2().first);
    inputs.push_back(adj.sym2_alt2().second);
    inputs.push_back(Character::irreducible(rs, wv({1, 1})).tensor(adj));
    for (const Character& c : inputs) {
      Decomposition d = decompose(c);
      CHECK(d.trivial_multiplicity() == oracles::trivial_multiplicity_oracle(c, weyl));
      CHECK(oracles::evaluation_oracle_failures(c, d, weyl, 10) == 0);
      CHECK(rebuild(rs, d) == c);
    }
  }
}

TEST_CASE("symmetric and alternating squares") {
  RootSystem b2 = RootSystem::build({Family::B, 2});
  Character adj = Character::adjoint(b2);
  auto [sym, alt] = adj.sym2_alt2();
  CHECK(sym.dimension() == 55);
  CHECK(alt.dimension() == 45);
  Character joined = sym;
  joined += alt;
  CHECK(joined == adj.tensor(adj));
  CHECK(decompose(sym).trivial_multiplicity() == 1);  // the invariant form is symmetric
  CHECK(decompose(alt).trivial_multiplicity() == 0);

  RootSystem a1 = RootSystem::build({Family::A, 1});
  Character sym3 = Character::irreducible(a1, wv({3}));
  auto [s3, a3] = sym3.sym2_alt2();
  CHECK(decompose(s3).trivial_multiplicity() == 0);
  CHECK(decompose(a3).trivial_multiplicity() == 1);  // symplectic

  Character std2 = Character::irreducible(a1, wv({1}));
  auto [s1, a1sq] = std2.sym2_alt2();
  CHECK(s1.dimension() == 3);
  CHECK(a1sq.dimension() == 1);

  // reducible input is rejected
  Character red = std2;
  red += Character::trivial(a1);
  CHECK_THROWS_AS(red.sym2_alt2(), std::invalid_argument);
}

TEST_CASE("the adjoint of B2 is the exterior square of its vector representation") {
  RootSystem b2 = RootSystem::build({Family::B, 2});
  Character vec5 = Character::irreducible(b2, wv({1, 0}));
  REQUIRE(vec5.dimension() == 5);
  auto [sym, alt] = vec5.sym2_alt2();
  CHECK(alt == Character::adjoint(b2));
  CHECK(alt.dimension() == 10);
}

TEST_CASE("irreducible enumeration at fixed dimension") {
  auto recs4 = enumerate_irreps_of_dim(4, 4, false);
  REQUIRE(recs4.size() == 3);
  auto find = [&recs4](const std::string& alg) -> const IrrepRecord* {
    for (const auto& r : recs4)
      if (r.algebra == alg) return &r;
    return nullptr;
  };
  const IrrepRecord* a3 = find("A3");
  REQUIRE(a3 != nullptr);
  CHECK(a3->form == FormType::NEITHER);
  const IrrepRecord* a1 = find("A1");
  REQUIRE(a1 != nullptr);
  CHECK(a1->weights[0] == wv({3}));
  CHECK(a1->form == FormType::SYMPLECTIC);
  const IrrepRecord* c2 = find("C2");
  REQUIRE(c2 != nullptr);
  CHECK(c2->form == FormType::SYMPLECTIC);
  CHECK(weyl_dimension(RootSystem::build({Family::C, 2}), c2->weights[0]) == 4);

  auto with_products = enumerate_irreps_of_dim(4, 4, true);
  REQUIRE(with_products.size() == 4);
  const IrrepRecord* prod = nullptr;
  for (const auto& r : with_products)
    if (r.factors.size() == 2) prod = &r;
  REQUIRE(prod != nullptr);
  CHECK(prod->algebra == "A1 x A1");
  CHECK(prod->form == FormType::ORTHOGONAL);
  CHECK(prod->weights[0] == wv({1}));
  CHECK(prod->weights[1] == wv({1}));

  auto recs1 = enumerate_irreps_of_dim(1, 4, true);
  REQUIRE(recs1.size() == 1);
  CHECK(recs1[0].algebra == "trivial");

  auto recs2 = enumerate_irreps_of_dim(2, 4, true);
  REQUIRE(recs2.size() == 1);
  CHECK(recs2[0].algebra == "A1");
  CHECK(recs2[0].form == FormType::SYMPLECTIC);
}

TEST_CASE("irreducible-character memo is safe under concurrent fill") {
  RootSystem d5 = RootSystem::build({Family::D, 5});
  Character reference = Character::irreducible(d5, wv({1, 1, 0, 0, 0}));
  std::vector<std::thread> threads;
  std::atomic<int> mismatches{0};
  for (int k = 0; k < 4; ++k)
    threads.emplace_back([&] {
      for (long a = 0; a <= 1; ++a)
        for (long b = 0; b <= 1; ++b) {
          Character c = Character::irreducible(d5, wv({a, b, 0, 0, 0}));
          if (c.dimension() != weyl_dimension(d5, wv({a, b, 0, 0, 0}))) ++mismatches;
        }
      if (!(Character::irreducible(d5, wv({1, 1, 0, 0, 0})) == reference)) ++mismatches;
    });
  for (auto& t : threads) t.join();
  CHECK(mismatches == 0);
}

TEST_CASE("character evaluation is a ring homomorphism point") {
  RootSystem b2 = RootSystem::build({Family::B, 2});
  Character adj = Character::adjoint(b2);
  std::vector<Rat> t{Rat(2), Rat(1, 3)};
  CHECK(adj.tensor(adj).evaluate(t) == adj.evaluate(t) * adj.evaluate(t));
  CHECK(Character::trivial(b2).evaluate(t) == 1);
}
