// Acceptance suite: one criterion per section, each printed as a single
// [PASS]/[FAIL] line with its runtime. All comparisons are exact; the only
// tolerances are the stated wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dimdata/cache.hpp"
#include "dimdata/conjugacy.hpp"
#include "dimdata/embed.hpp"
#include "dimdata/liealg.hpp"
#include "dimdata/repchar.hpp"
#include "dimdata/rootsys.hpp"
#include "oracles.hpp"

using namespace dimdata;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, const std::string& label, bool pass, double secs, const std::string& note = "") {
  std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", id, label.c_str(),
              secs, note.empty() ? "" : " -- ", note.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <typename F>
void criterion(int id, const std::string& label, F body) {
  auto t0 = Clock::now();
  try {
    std::string note;
    bool pass = body(note);
    report(id, label, pass, seconds_since(t0), note);
  } catch (const std::exception& e) {
    report(id, label, false, seconds_since(t0), std::string("exception: ") + e.what());
  }
}

WeightVector wv(std::vector<long> v) { return WeightVector::from_ints(v); }

// ---- shared state across criteria ----

struct ClassificationData {
  std::vector<ClassifiedType> rows;
  std::vector<ObstructionReport> obstructions;
  double elapsed = 0;
};
ClassificationData classification;

struct DecomposedCharacter {
  Character restricted;
  Decomposition decomposition;
};
struct DimensionCase {
  SimpleType h_type;
  std::vector<DecomposedCharacter> decomposed;
  bool all_equal = true;
};
std::vector<DimensionCase> dimension_cases;

// ---- criteria ----

void criterion_1_classification() {
  criterion(1, "classification at rank 20 matches the simple-type list", [](std::string& note) {
    auto t0 = Clock::now();
    classification.rows = classify_examples(20);
    classification.obstructions.clear();
    for (const auto& row : classification.rows)
      classification.obstructions.push_back(obstruction_report(row.type));
    classification.elapsed = seconds_since(t0);

    std::set<std::string> expected = {"B2", "C2", "E6", "E8", "F4", "G2"};
    for (int n = 4; n <= 20; n += 4) expected.insert("A" + std::to_string(n));
    for (int n = 4; n <= 20; n += 2) {
      expected.insert("B" + std::to_string(n));
      expected.insert("C" + std::to_string(n));
    }
    std::set<std::string> got;
    for (const auto& row : classification.rows)
      if (row.verdict == Verdict::EXAMPLE) got.insert(row.type.name());

    bool set_ok = (got == expected);
    bool excluded_ok = true;
    for (const char* t : {"A2", "A6", "A10", "A14", "A18", "D4", "D6", "D8", "D10", "D12",
                          "D14", "D16", "D18", "D20"})
      if (got.count(t)) excluded_ok = false;
    bool flagged = false;
    for (const auto& row : classification.rows)
      if (row.type.name() == "B2" && row.b2_c2_alias) flagged = true;
    bool timing_ok = classification.elapsed < 5.0;

    std::ostringstream os;
    os << got.size() << " EXAMPLE types, classify+obstruction in " << classification.elapsed
       << "s";
    if (!set_ok) os << "; EXAMPLE set mismatch";
    if (!timing_ok) os << "; exceeded the 5s budget";
    note = os.str();
    return set_ok && excluded_ok && flagged && timing_ok;
  });
}

void criterion_2_algebra() {
  criterion(2, "Jacobi and Killing invariance exact for B2, G2, A4", [](std::string& note) {
    std::map<std::string, long> expected_dim = {{"B2", 10}, {"G2", 14}, {"A4", 24}};
    for (const auto& [name, dim] : expected_dim) {
      StructureTable st = StructureTable::build(RootSystem::build(SimpleType::parse(name)));
      if (st.dim() != dim) {
        note = name + " has wrong dimension";
        return false;
      }
      int n = st.dim();
      // Jacobi on all index triples (repeated indices vanish by antisymmetry,
      // which is also checked on every ordered pair)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          std::map<int, long long> anti;
          for (const auto& [k, c] : st.bracket(i, j)) anti[k] += c;
          for (const auto& [k, c] : st.bracket(j, i)) anti[k] += c;
          for (const auto& [k, c] : anti)
            if (c != 0) {
              note = name + ": antisymmetry fails";
              return false;
            }
        }
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          for (int z = y + 1; z < n; ++z) {
            std::map<int, long long> acc;
            for (const auto& [k, c] : st.bracket_vectors({{x, 1}}, st.bracket(y, z))) acc[k] += c;
            for (const auto& [k, c] : st.bracket_vectors({{y, 1}}, st.bracket(z, x))) acc[k] += c;
            for (const auto& [k, c] : st.bracket_vectors({{z, 1}}, st.bracket(x, y))) acc[k] += c;
            for (const auto& [k, c] : acc)
              if (c != 0) {
                note = name + ": Jacobi fails";
                return false;
              }
          }
      BilinearForm gram = killing_form(st);
      if (gram.det() == 0) {
        note = name + ": Killing form degenerate";
        return false;
      }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            Rat lhs(0);
            for (const auto& [k, c] : st.bracket(x, y)) lhs += rat_ll(c) * gram.at(k, z);
            for (const auto& [k, c] : st.bracket(x, z)) lhs += rat_ll(c) * gram.at(y, k);
            if (lhs != 0) {
              note = name + ": Killing form not ad-invariant";
              return false;
            }
          }
    }
    note = "dim {10, 14, 24}; antisymmetry, Jacobi, nondegeneracy, ad-invariance all exact";
    return true;
  });
}

void criterion_3_parity() {
  criterion(3, "induced-automorphism determinant equals diagram parity", [](std::string& note) {
    int nontrivial_checked = 0;
    for (const char* name : {"A2", "A3", "A4", "D4", "D5", "E6"}) {
      RootSystem rs = RootSystem::build(SimpleType::parse(name));
      StructureTable st = StructureTable::build(rs);
      for (const DiagramAutomorphism& d : rs.diagram_automorphisms()) {
        LinearMap tau = induced_automorphism(st, d);
        if (map_determinant(tau) != Rat(d.parity)) {
          note = std::string(name) + ": determinant differs from parity";
          return false;
        }
        if (!d.is_identity()) ++nontrivial_checked;
      }
      // the specific signs: A4 and E6 flips are even, A2 and D4 swaps odd
      auto autos = rs.diagram_automorphisms();
      std::string nm = name;
      for (const auto& d : autos) {
        if (d.is_identity()) continue;
        Rat det = map_determinant(induced_automorphism(st, d));
        if ((nm == "A4" || nm == "E6") && det != 1) {
          note = nm + ": flip should have determinant +1";
          return false;
        }
        int moved = 0;
        for (size_t i = 0; i < d.node_permutation.size(); ++i)
          if (d.node_permutation[i] != static_cast<int>(i)) ++moved;
        if ((nm == "A2" || nm == "D4") && moved == 2 && det != -1) {
          note = nm + ": node swap should have determinant -1";
          return false;
        }
      }
    }
    note = std::to_string(nontrivial_checked) + " nontrivial automorphisms, exact equality";
    return true;
  });
}

void criterion_4_dimension_data() {
  criterion(4, "dimension data of i and i' agree (B2 to 4000, G2 to 500)", [](std::string& note) {
    auto t0 = Clock::now();
    dimension_cases.clear();
    struct Task {
      SimpleType type;
      long long bound;
    };
    long rows_total = 0;
    for (Task task : {Task{SimpleType{Family::B, 2}, 4000}, Task{SimpleType{Family::G, 2}, 500}}) {
      RootSystem h = RootSystem::build(task.type);
      AdjointEmbedding i = build_adjoint_embedding(h);
      AdjointEmbedding ip = twist_odd(i);
      RootSystem dn = RootSystem::build(i.d_type());
      DimensionCase dc;
      dc.h_type = task.type;
      for (const WeightVector& w : enumerate_so_weights(dn, task.bound)) {
        Character cg = Character::irreducible(dn, w);
        Character r1 = restrict_character(i, cg);
        Character r2 = restrict_character(ip, cg);
        Decomposition d1 = decompose(r1);
        Decomposition d2 = decompose(r2);
        if (d1.trivial_multiplicity() != d2.trivial_multiplicity()) dc.all_equal = false;
        dc.decomposed.push_back({std::move(r1), std::move(d1)});
        dc.decomposed.push_back({std::move(r2), std::move(d2)});
        ++rows_total;
      }
      dimension_cases.push_back(std::move(dc));
    }
    double elapsed = seconds_since(t0);
    bool all_equal = true;
    for (const auto& dc : dimension_cases) all_equal = all_equal && dc.all_equal;
    bool timing_ok = elapsed < 600.0;
    std::ostringstream os;
    os << rows_total << " weights compared in " << elapsed << "s";
    if (!all_equal) os << "; DISCREPANCY FOUND";
    note = os.str();
    return all_equal && timing_ok;
  });
}

void criterion_5_branching_oracles() {
  criterion(5, "decompositions agree with alternating-sum and evaluation oracles",
            [](std::string& note) {
    if (dimension_cases.empty()) {
      note = "criterion 4 produced no characters";
      return false;
    }
    long checked = 0;
    for (const auto& dc : dimension_cases) {
      RootSystem h = RootSystem::build(dc.h_type);
      auto weyl = oracles::weyl_group(h);
      for (const auto& item : dc.decomposed) {
        long long triv = item.decomposition.trivial_multiplicity();
        if (triv != oracles::trivial_multiplicity_oracle(item.restricted, weyl)) {
          note = dc.h_type.name() + ": alternating-sum oracle disagrees";
          return false;
        }
        if (oracles::evaluation_oracle_failures(item.restricted, item.decomposition, weyl, 10) !=
            0) {
          note = dc.h_type.name() + ": evaluation oracle disagrees";
          return false;
        }
        ++checked;
      }
    }
    note = std::to_string(checked) + " characters cross-validated at 10 rational points each";
    return true;
  });
}

void criterion_6_invariant_form() {
  criterion(6, "unique invariant form, symmetric, for adjoints of B2, G2, F4",
            [](std::string& note) {
    for (const char* name : {"B2", "G2", "F4"}) {
      RootSystem rs = RootSystem::build(SimpleType::parse(name));
      Character adj = Character::adjoint(rs);
      if (decompose(adj.tensor(adj)).trivial_multiplicity() != 1) {
        note = std::string(name) + ": tensor-square trivial multiplicity is not 1";
        return false;
      }
      auto [sym, alt] = adj.sym2_alt2();
      if (decompose(sym).trivial_multiplicity() != 1) {
        note = std::string(name) + ": invariant form missing from Sym^2";
        return false;
      }
      if (decompose(alt).trivial_multiplicity() != 0) {
        note = std::string(name) + ": unexpected invariant in Alt^2";
        return false;
      }
    }
    note = "trivial multiplicity exactly 1, in the symmetric square";
    return true;
  });
}

void criterion_7_local_conjugacy() {
  criterion(7, "sampled eigenvalue multisets of i and i' agree", [](std::string& note) {
    LocalConjugacyReport b2 =
        local_conjugacy_check(RootSystem::build(SimpleType{Family::B, 2}), 200, 7);
    LocalConjugacyReport g2 =
        local_conjugacy_check(RootSystem::build(SimpleType{Family::G, 2}), 50, 7);
    std::ostringstream os;
    os << "B2: " << b2.failures << "/200 failures, G2: " << g2.failures << "/50, "
       << "min eigenvalue-1 multiplicity " << std::min(b2.min_one_multiplicity, g2.min_one_multiplicity);
    note = os.str();
    return b2.failures == 0 && g2.failures == 0 && b2.min_one_multiplicity >= 2 &&
           g2.min_one_multiplicity >= 2;
  });
}

void criterion_8_so_conjugacy() {
  criterion(8, "SO-conjugacy decision procedure with verified witnesses", [](std::string& note) {
    auto gvals = [](std::vector<Rat> v) {
      std::vector<GaussRat> out;
      for (Rat& r : v) out.emplace_back(std::move(r));
      return out;
    };
    auto verify = [](const OrthogonalElement& a, const OrthogonalElement& b,
                     const Mat<GaussRat>& c) {
      return preserves_hyperbolic_form(c) && c.det() == GaussRat(1) &&
             c.inverse() * a.matrix * c == b.matrix;
    };

    OrthogonalElement a1 = diagonal_element(gvals({Rat(2), Rat(5), Rat(1)}));
    ConjugacyResult r1 = decide_so_conjugacy(a1, a1);
    if (r1.verdict != ConjVerdict::SO_CONJUGATE || !r1.witness || !verify(a1, a1, *r1.witness)) {
      note = "identical elements not certified SO-conjugate";
      return false;
    }

    OrthogonalElement a2 = diagonal_element(gvals({Rat(2), Rat(1), Rat(3)}));
    OrthogonalElement b2 = conjugate_element(a2, odd_swap(6).matrix);
    ConjugacyResult r2 = decide_so_conjugacy(a2, b2);
    if (r2.verdict != ConjVerdict::SO_CONJUGATE || !r2.witness || !verify(a2, b2, *r2.witness)) {
      note = "odd conjugation with eigenvalue 1 not corrected into SO";
      return false;
    }

    OrthogonalElement a3 =
        diagonal_element(gvals({Rat(2), Rat(3), Rat(5), Rat(7), Rat(11)}));
    OrthogonalElement b3 = conjugate_element(a3, odd_swap(10).matrix);
    ConjugacyResult r3 = decide_so_conjugacy(a3, b3);
    if (r3.verdict != ConjVerdict::O_ONLY) {
      note = "element without +-1 eigenvalues not flagged O_ONLY";
      return false;
    }
    note = "identity witness, odd-corrected witness (det 1, exact), O_ONLY case";
    return true;
  });
}

void criterion_9_centralizer() {
  criterion(9, "adjoint commutant is one-dimensional (B2, G2, F4, E6)", [](std::string& note) {
    auto t0 = Clock::now();
    for (const char* name : {"B2", "G2", "F4", "E6"}) {
      StructureTable st = StructureTable::build(RootSystem::build(SimpleType::parse(name)));
      long long cd = commutant_dimension(st, adjoint_rep_matrices(st));
      if (cd != 1) {
        note = std::string(name) + ": commutant dimension " + std::to_string(cd);
        return false;
      }
    }
    double elapsed = seconds_since(t0);
    std::ostringstream os;
    os << "all equal 1; E6 within budget (" << elapsed << "s total)";
    note = os.str();
    return elapsed < 120.0;
  });
}

void criterion_10_irreps() {
  criterion(10, "four-dimensional irreducibles with form tags", [](std::string& note) {
    auto recs = enumerate_irreps_of_dim(4, 4, true);
    std::map<std::string, FormType> got;
    for (const auto& r : recs) {
      if (got.count(r.algebra)) {
        note = "duplicate algebra entry " + r.algebra;
        return false;
      }
      got[r.algebra] = r.form;
    }
    std::map<std::string, FormType> expected = {
        {"A3", FormType::NEITHER},
        {"A1", FormType::SYMPLECTIC},       // sym^3 of the standard rep
        {"C2", FormType::SYMPLECTIC},       // the standard rep
        {"A1 x A1", FormType::ORTHOGONAL},  // tensor of two standard reps
    };
    if (got != expected) {
      note = "enumeration differs from the expected four-entry list";
      return false;
    }
    note = "exactly {A3, A1 sym^3, C2 std, A1 x A1}; symplectic tags on A1 and C2 only";
    return true;
  });
}

void criterion_11_consistency() {
  criterion(11, "obstruction reports agree with the classifier at every rank <= 20",
            [](std::string& note) {
    if (classification.rows.empty()) {
      note = "criterion 1 did not run";
      return false;
    }
    for (size_t k = 0; k < classification.rows.size(); ++k) {
      bool example = classification.rows[k].verdict == Verdict::EXAMPLE;
      if (example != classification.obstructions[k].obstructed) {
        note = classification.rows[k].type.name() + ": classifier and obstruction disagree";
        return false;
      }
      // a failed report names its first failing ingredient
      if (!example && classification.obstructions[k].failing.empty()) {
        note = classification.rows[k].type.name() + ": missing failing ingredient";
        return false;
      }
    }
    note = std::to_string(classification.rows.size()) + " types compared";
    return true;
  });
}

}  // namespace

int main() {
  cache::configure(false, std::nullopt);
  std::printf("acceptance suite: exact checks, wall-clock budgets as stated\n");
  auto t0 = Clock::now();

  criterion_1_classification();
  criterion_2_algebra();
  criterion_3_parity();
  criterion_4_dimension_data();
  criterion_5_branching_oracles();
  criterion_6_invariant_form();
  criterion_7_local_conjugacy();
  criterion_8_so_conjugacy();
  criterion_9_centralizer();
  criterion_10_irreps();
  criterion_11_consistency();

  std::printf("%d of 11 criteria passed (%.1fs total)\n", 11 - failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
