#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimdata/embed.hpp"
#include "dimdata/liealg.hpp"
#include "dimdata/matrix.hpp"

namespace dimdata {

/// Semisimple torus element of H, given by the values of the coordinate
/// characters: all entries nonzero exact rationals.
struct TorusElement {
  std::vector<Rat> coords;
};

/// Exact eigenvalue multiset of a semisimple element in the 2N-dimensional
/// representation; closed under inversion by the orthogonal symmetry.
struct EigenvalueMultiset {
  std::vector<Rat> values;  // sorted

  size_t size() const { return values.size(); }
  long long multiplicity(const Rat& v) const;
  bool inversion_closed() const;
  friend bool operator==(const EigenvalueMultiset&, const EigenvalueMultiset&) = default;
};

/// { t^beta : beta in Phi } plus 1 with multiplicity rank, evaluated as
/// exact Laurent monomials through the (possibly twisted) restriction map.
EigenvalueMultiset eigenvalues_through(const AdjointEmbedding& e, const TorusElement& t);

/// Deterministic torus sample: coordinates drawn from small primes and
/// their inverses, reproducible from (seed, index).
TorusElement sample_torus_element(int rank, std::uint64_t seed, std::uint64_t index);

struct LocalConjugacyReport {
  SimpleType type;
  int samples = 0;
  std::uint64_t seed = 0;
  int failures = 0;
  long long min_one_multiplicity = -1;  // smallest eigenvalue-1 multiplicity seen

  bool passed() const { return failures == 0; }
};

/// Prop 3.2 step 1 at matrix-free level: the eigenvalue multisets of
/// i(t) and i'(t) agree for every sampled semisimple t.
LocalConjugacyReport local_conjugacy_check(const RootSystem& h, int samples, std::uint64_t seed);

/// Element of O(2N) over Q(i), with respect to the fixed hyperbolic form
/// Diag(P, ..., P), P = [[0,1],[1,0]]. The spectrum is carried alongside
/// the matrix; the decision procedure verifies it exactly before use.
struct OrthogonalElement {
  Mat<GaussRat> matrix;
  std::vector<GaussRat> spectrum;  // claimed eigenvalues, with multiplicity

  int dim() const { return matrix.rows(); }
};

/// Gram matrix Diag(P, ..., P) of size 2N.
Mat<GaussRat> hyperbolic_gram(int two_n);
bool preserves_hyperbolic_form(const Mat<GaussRat>& m);

/// diag(a_1, a_1^{-1}, ..., a_N, a_N^{-1}) in the hyperbolic basis.
OrthogonalElement diagonal_element(const std::vector<GaussRat>& pair_values);
/// The standard odd involution: swaps the first hyperbolic pair.
OrthogonalElement odd_swap(int two_n);
/// c^{-1} a c for c in O(2N); transported spectrum.
OrthogonalElement conjugate_element(const OrthogonalElement& a, const Mat<GaussRat>& c);
/// i(t) as an explicit diagonal orthogonal matrix in a basis adapted to
/// the embedding (one hyperbolic pair per restriction column).
OrthogonalElement torus_image_element(const AdjointEmbedding& e, const TorusElement& t);

enum class ConjVerdict { SO_CONJUGATE, O_ONLY, NOT_O_CONJUGATE };
std::string conj_verdict_name(ConjVerdict v);

struct ConjugacyResult {
  ConjVerdict verdict;
  std::optional<Mat<GaussRat>> witness;  // det 1, b = C^{-1} a C, exact-verified
};

/// Lemma 3.3 as a decision procedure. NOT_O_CONJUGATE when the spectra
/// (hence characteristic polynomials) differ; otherwise builds an explicit
/// form-compatible conjugator, correcting an odd one by an odd centralizer
/// element inside a +-1 eigenspace when possible.
ConjugacyResult decide_so_conjugacy(const OrthogonalElement& a, const OrthogonalElement& b);

/// Dimension of { X : X M = M X for all rep matrices M }, by exact sparse
/// nullspace computation. rep_matrices[k] must represent the k-th Chevalley
/// basis element of st, so that the Cartan images are known commuting
/// semisimple operators (used to block the unknowns).
long long commutant_dimension(const StructureTable& st, const std::vector<SparseMat>& rep_matrices);
long long commutant_dimension(const StructureTable& st, const std::vector<Mat<Rat>>& rep_matrices);

/// Adjoint representation matrices in structure-table basis order.
std::vector<SparseMat> adjoint_rep_matrices(const StructureTable& st);

struct ObstructionIngredient {
  std::string name;
  bool checked = false;
  bool pass = false;
  std::string detail;
};

struct ObstructionReport {
  SimpleType type;
  bool obstructed = false;
  std::string failing;  // first failing ingredient, empty when obstructed
  std::vector<ObstructionIngredient> ingredients;
};

/// Assembles the proof ingredients for "locally conjugate but not globally
/// conjugate in image": even rank, even diagram automorphisms, determinant
/// +1 induced automorphisms, trivial commutant, odd twist element.
ObstructionReport obstruction_report(const SimpleType& h_type);

}  // namespace dimdata
