#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dimdata/matrix.hpp"
#include "dimdata/rootsys.hpp"

namespace dimdata {

/// Square exact-rational matrix acting on the algebra.
using LinearMap = Mat<Rat>;
/// Symmetric Gram matrix of a bilinear form on the algebra.
using BilinearForm = Mat<Rat>;

/// Sparse vector in the Chevalley basis: (basis index, coefficient).
using SparseVec = std::vector<std::pair<int, long long>>;

/// Chevalley basis of the simple Lie algebra of a root system, with
/// integral structure constants. Basis order: e_beta for beta positive
/// (canonical root order), then f_beta in the same order, then h_1..h_r.
class StructureTable {
 public:
  static StructureTable build(const RootSystem& rs);

  /// Rebuild from serialized data (disk-cache path). The caller is
  /// responsible for having validated the payload checksum.
  static StructureTable restore(const RootSystem& rs,
                                std::vector<std::vector<std::pair<int, SparseVec>>> rows,
                                std::unordered_map<long long, long long> constants);

  const RootSystem& root_system() const { return rs_; }
  int dim() const { return dim_; }
  int num_positive() const { return npos_; }
  int rank() const { return rs_.rank(); }

  int e_index(int pos_root) const { return pos_root; }
  int f_index(int pos_root) const { return npos_ + pos_root; }
  int h_index(int i) const { return 2 * npos_ + i; }

  std::string basis_label(int idx) const;

  /// [b_i, b_j]; empty vector when the bracket vanishes.
  const SparseVec& bracket(int i, int j) const;

  /// [x, y] for sparse coefficient vectors.
  SparseVec bracket_vectors(const SparseVec& x, const SparseVec& y) const;

  /// Chevalley constant N_{alpha,beta} for roots with alpha+beta a root.
  long long structure_constant(const WeightVector& alpha, const WeightVector& beta) const;

  /// Nonzero brackets grouped by left index, (j, value vector) pairs.
  const std::vector<std::vector<std::pair<int, SparseVec>>>& rows() const { return rows_; }
  const std::unordered_map<long long, long long>& constants() const { return constants_; }

  /// Root id helpers: positive root k <-> id k, its negative <-> id npos+k.
  int root_id(const WeightVector& root) const;
  const WeightVector& root_of_id(int id) const;

 private:
  StructureTable() = default;

  RootSystem rs_;
  int dim_ = 0, npos_ = 0;
  std::vector<std::vector<std::pair<int, SparseVec>>> rows_;  // sorted by j
  std::unordered_map<long long, long long> constants_;        // (a_id, b_id) -> N
  std::vector<WeightVector> roots_by_id_;                     // positives then negatives
};

/// Pluggable construction point so a disk cache can back table building
/// transparently. Empty provider means plain StructureTable::build.
using StructureTableProvider = std::function<StructureTable(const RootSystem&)>;
void set_structure_table_provider(StructureTableProvider p);
StructureTable make_structure_table(const RootSystem& rs);

/// Matrix of ad(X) on the Chevalley basis; X given by its coefficients.
LinearMap adjoint_matrix(const StructureTable& st, const std::vector<Rat>& x);
SparseMat adjoint_matrix_sparse(const StructureTable& st, int basis_index);

/// Killing form gram[i][j] = Tr(ad(b_i) ad(b_j)).
BilinearForm killing_form(const StructureTable& st);

/// The algebra automorphism induced by a Dynkin diagram automorphism via
/// the Chevalley-generator lift e_i -> e_{sigma(i)}. Verified to preserve
/// all brackets; throws std::runtime_error naming the offending root pair
/// if the sign extension were inconsistent.
LinearMap induced_automorphism(const StructureTable& st, const DiagramAutomorphism& d);

/// Exact determinant of a signed-permutation matrix or general map.
Rat map_determinant(const LinearMap& m);

/// Exact exponential of a nilpotent matrix; rejects input whose powers do
/// not vanish within dim steps.
LinearMap exp_nilpotent(const StructureTable& st, const LinearMap& n);

}  // namespace dimdata
