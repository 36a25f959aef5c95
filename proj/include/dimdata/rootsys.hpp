#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dimdata/matrix.hpp"
#include "dimdata/rational.hpp"

namespace dimdata {

/// One of the nine families of simple root systems.
enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family = Family::A;
  int rank = 0;

  std::string name() const;
  static SimpleType parse(const std::string& s);  // "B2", "E6", ...
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend bool operator<(const SimpleType& a, const SimpleType& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.rank < b.rank;
  }
};

/// Throws std::invalid_argument with the admissible-range message when
/// (family, rank) is not a valid simple type.
void validate(const SimpleType& t);
bool is_valid(const SimpleType& t);

/// Weight of the ambient algebra in fundamental-weight coordinates.
/// Integral weights have integer coordinates; dominant ones nonnegative.
struct WeightVector {
  std::vector<Rat> coords;

  WeightVector() = default;
  explicit WeightVector(int rank) : coords(rank, Rat(0)) {}
  explicit WeightVector(std::vector<Rat> c) : coords(std::move(c)) {}
  static WeightVector from_ints(const std::vector<long>& v);

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  bool is_integral() const;
  bool is_dominant() const;

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator-=(const WeightVector& o);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  WeightVector operator-() const;
  WeightVector scaled(const Rat& c) const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.coords == b.coords; }
  friend bool operator<(const WeightVector& a, const WeightVector& b);  // lexicographic

  std::string str() const;  // "(2, -1)"
};

/// Symmetry of the Dynkin diagram: a Cartan-matrix-preserving node
/// permutation together with its signature.
struct DiagramAutomorphism {
  std::vector<int> node_permutation;  // image of node i at position i, 0-based
  int parity;                         // +1 or -1, the permutation signature

  bool is_identity() const;
};

int permutation_sign(const std::vector<int>& perm);

/// Immutable root system of a simple type: full root enumeration in
/// fundamental-weight coordinates, Weyl machinery and the invariant form.
class RootSystem {
 public:
  RootSystem() = default;  // empty; assign from build()
  static RootSystem build(const SimpleType& t);
  /// Shared immutable instance, alive for the whole process. Characters
  /// bind to these so they never outlive their root system.
  static const RootSystem& shared(const SimpleType& t);

  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<std::vector<long>>& cartan() const { return cartan_; }

  const std::vector<WeightVector>& simple_roots() const { return simple_roots_; }
  const std::vector<WeightVector>& roots() const { return roots_; }
  /// Ordered by height, ties broken lexicographically on coordinates.
  const std::vector<WeightVector>& positive_roots() const { return positive_roots_; }
  const WeightVector& highest_root() const { return positive_roots_.back(); }
  const WeightVector& weyl_vector() const { return rho_; }

  long dim_lie_algebra() const { return static_cast<long>(roots_.size()) + rank(); }

  /// Coroot H_beta in the simple-coroot basis (integer coordinates).
  const std::vector<long>& coroot(const WeightVector& root) const;

  /// Gram matrix of the invariant inner product on fundamental-weight
  /// coordinates: symmetrizing diagonal composed with the inverse Cartan.
  const Mat<Rat>& inner_product() const { return gram_; }
  Rat inner(const WeightVector& a, const WeightVector& b) const;
  /// <lambda, beta_vee> for a root beta.
  Rat pairing_coroot(const WeightVector& lambda, const WeightVector& beta) const;

  WeightVector simple_reflect(const WeightVector& w, int i) const;
  WeightVector reflect(const WeightVector& w, const WeightVector& root) const;

  bool is_root(const WeightVector& w) const;
  /// Index into positive_roots(), or -1.
  int positive_root_index(const WeightVector& w) const;

  std::vector<Rat> to_root_basis(const WeightVector& w) const;
  Rat height(const WeightVector& w) const;  // sum of root-basis coordinates

  WeightVector dominant_representative(const WeightVector& w) const;
  std::set<WeightVector> weyl_orbit(const WeightVector& w) const;

  const std::vector<DiagramAutomorphism>& diagram_automorphisms() const { return diagram_automorphisms_; }

  WeightVector fundamental_weight(int i) const;
  /// Root-length symmetrizer entries d_i = (alpha_i, alpha_i)/2.
  const std::vector<long>& symmetrizer() const { return sym_; }

 private:
  SimpleType type_;
  std::vector<std::vector<long>> cartan_;  // cartan_[i][j] = <alpha_j, alpha_i_vee>
  std::vector<long> sym_;
  std::vector<WeightVector> simple_roots_;
  std::vector<WeightVector> positive_roots_;
  std::vector<WeightVector> roots_;
  WeightVector rho_;
  Mat<Rat> gram_;
  Mat<Rat> cartan_inv_;
  std::vector<DiagramAutomorphism> diagram_automorphisms_;
  std::map<WeightVector, int> positive_index_;
  std::map<WeightVector, std::vector<long>> coroots_;
};

enum class Verdict { EXAMPLE, NO_ODD_RANK, NO_ODD_AUTOMORPHISM };

std::string verdict_name(Verdict v);

struct ClassifiedType {
  SimpleType type;
  Verdict verdict;
  /// B2 and C2 are one isomorphism class; both rows carry this flag.
  bool b2_c2_alias = false;
};

/// Every simple type of rank <= max_rank with its verdict against the
/// even-rank / even-automorphism conditions. Deterministic order.
std::vector<ClassifiedType> classify_examples(int max_rank);

}  // namespace dimdata
