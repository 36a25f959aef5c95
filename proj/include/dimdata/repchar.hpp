#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimdata/rootsys.hpp"

namespace dimdata {

/// Optional disk backing for the irreducible-character memo. Installed by
/// the cache layer; the memo behaves identically with or without it.
struct CharacterDiskHooks {
  std::function<std::optional<std::map<WeightVector, long long>>(const SimpleType&,
                                                                 const WeightVector&)>
      load;
  std::function<void(const SimpleType&, const WeightVector&,
                     const std::map<WeightVector, long long>&)>
      store;
};
void set_character_disk_hooks(CharacterDiskHooks hooks);
void clear_character_disk_hooks();

/// Finite weight -> multiplicity map over a fixed root system.
/// Multiplicities may be negative (virtual characters).
class Character {
 public:
  // characters bind to the process-wide shared instance of their type, so
  // they may safely outlive the RootSystem object they were built from
  explicit Character(const RootSystem& rs) : rs_(&RootSystem::shared(rs.type())) {}
  Character(const RootSystem& rs, std::map<WeightVector, long long> terms)
      : rs_(&RootSystem::shared(rs.type())), terms_(std::move(terms)) {
    prune();
  }

  static Character trivial(const RootSystem& rs);
  /// Full weight map of the irreducible with the given dominant integral
  /// highest weight, by the Freudenthal recursion. Memoized per type.
  static Character irreducible(const RootSystem& rs, const WeightVector& lambda);
  static Character adjoint(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }
  const std::map<WeightVector, long long>& terms() const { return terms_; }
  long long multiplicity(const WeightVector& w) const;
  long long dimension() const;  // sum of multiplicities
  bool is_zero() const { return terms_.empty(); }

  bool is_weyl_invariant() const;

  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character& add_scaled(const Character& o, long long factor);
  friend bool operator==(const Character& a, const Character& b) {
    return a.terms_ == b.terms_;
  }

  /// Convolution of weight maps; rejects mismatched root systems.
  Character tensor(const Character& o) const;

  /// (Sym^2, Alt^2) of an irreducible character; their sum is tensor(c, c).
  std::pair<Character, Character> sym2_alt2() const;

  /// Exact evaluation at a torus point, sum of t^mu over terms.
  Rat evaluate(const std::vector<Rat>& t) const;

 private:
  void prune();

  const RootSystem* rs_;
  std::map<WeightVector, long long> terms_;
};

/// Exact Weyl dimension formula; rejects non-dominant or non-integral input.
long long weyl_dimension(const RootSystem& rs, const WeightVector& lambda);

struct Decomposition {
  std::map<WeightVector, long long> summands;  // dominant highest weight -> multiplicity

  long long multiplicity(const WeightVector& w) const {
    auto it = summands.find(w);
    return it == summands.end() ? 0 : it->second;
  }
  long long trivial_multiplicity() const;
};

/// Iterated highest-weight subtraction. Throws std::domain_error on
/// non-Weyl-invariant input or when a negative multiplicity shows the
/// character is malformed.
Decomposition decompose(const Character& c);

/// Rebuild sum(mult * irreducible) -- the round-trip side of decompose.
Character rebuild(const RootSystem& rs, const Decomposition& d);

enum class FormType { ORTHOGONAL, SYMPLECTIC, NEITHER };
std::string form_type_name(FormType f);

struct IrrepRecord {
  std::string algebra;                  // "A1", "C2", "A1 x A1", "trivial"
  std::vector<SimpleType> factors;      // empty for the d = 1 record
  std::vector<WeightVector> weights;    // highest weight per factor
  long long dim = 0;
  FormType form = FormType::NEITHER;

  std::string weight_str() const;
};

/// All irreducibles of exact dimension d with finite kernel, over simple
/// algebras of rank <= max_rank (one representative per isomorphism class;
/// the rank-2 B/C class is reported as C2, D3 as A3) and, when requested,
/// over two-factor semisimple algebras of total rank <= max_rank.
std::vector<IrrepRecord> enumerate_irreps_of_dim(long long d, int max_rank, bool allow_products);

}  // namespace dimdata
