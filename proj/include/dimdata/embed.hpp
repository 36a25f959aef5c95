#pragma once

#include <vector>

#include "dimdata/repchar.hpp"
#include "dimdata/rootsys.hpp"

namespace dimdata {

/// The adjoint embedding H -> SO(g, kappa) = SO(2N) at the weight-lattice
/// level: column j is the restriction of the D_N coordinate character
/// eps_j to the maximal torus of H. Untwisted columns are the positive
/// roots of H in canonical order followed by rank/2 zero columns.
struct AdjointEmbedding {
  RootSystem h;
  int g_rank = 0;  // N
  std::vector<WeightVector> restriction_columns;
  bool twisted = false;
  int twist_index = -1;  // column negated by the odd twist

  SimpleType d_type() const { return SimpleType{Family::D, g_rank}; }
};

/// Rejects root systems of odd rank (the even-rank assumption).
AdjointEmbedding build_adjoint_embedding(const RootSystem& h);

/// The odd twist: negates the column carrying the highest root, the
/// canonical representative of a determinant -1 element of O(2N) fixing
/// the torus. Involutive.
AdjointEmbedding twist_odd(const AdjointEmbedding& e);

/// eps-coordinates of a D_N weight given in fundamental-weight coordinates.
std::vector<Rat> d_weight_to_eps(int n, const WeightVector& w);
/// Whether a dominant D_N weight lies in the vector lattice of SO(2N)
/// (half-spin weights excluded).
bool is_so_weight(int n, const WeightVector& w);

/// Pushforward of a D_N integral-weight character along the embedding:
/// each weight sum(lambda_j eps_j) restricts to sum(lambda_j column_j).
Character restrict_character(const AdjointEmbedding& e, const Character& c);

/// dim V^H: multiplicity of the trivial summand in the restriction of the
/// D_N irreducible with highest weight lambda_g.
long long dim_fixed_space(const AdjointEmbedding& e, const WeightVector& lambda_g);
long long dim_fixed_space(const AdjointEmbedding& e, const RootSystem& dn,
                          const WeightVector& lambda_g);

struct DimensionDatum {
  WeightVector g_highest_weight;
  long long g_dimension = 0;
  long long fixed_dim = 0;
};

/// One datum per dominant integral D_N weight with dimension <= dim_bound,
/// ordered by dimension then lexicographically.
std::vector<DimensionDatum> dimension_data_table(const AdjointEmbedding& e, long long dim_bound);

struct DimensionDataRow {
  WeightVector g_highest_weight;
  long long g_dimension = 0;
  long long fixed_untwisted = 0;
  long long fixed_twisted = 0;

  bool equal() const { return fixed_untwisted == fixed_twisted; }
};

struct DimensionDataReport {
  SimpleType h_type;
  int g_rank = 0;
  long long dim_bound = 0;
  std::vector<DimensionDataRow> rows;
  long long discrepancies = 0;

  bool all_equal() const { return discrepancies == 0; }
};

/// Builds i and i' for H and compares their dimension-data tables
/// entrywise up to the bound.
DimensionDataReport verify_dimension_data_equal(const RootSystem& h, long long dim_bound);

/// Dominant D_N vector-lattice weights with dimension <= bound,
/// ordered by dimension then lexicographically.
std::vector<WeightVector> enumerate_so_weights(const RootSystem& dn, long long dim_bound);

}  // namespace dimdata
