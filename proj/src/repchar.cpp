#include "dimdata/repchar.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dimdata {

namespace {

// Shared memo of irreducible weight maps, keyed by type and highest weight.
// Deterministic construction makes entries reusable across RootSystem
// instances of the same type; behaves as if absent.
struct IrrMemo {
  std::mutex mu;
  std::map<std::pair<std::string, WeightVector>, std::map<WeightVector, long long>> table;
  CharacterDiskHooks disk;
};
IrrMemo& irr_memo() {
  static IrrMemo m;
  return m;
}

void require_dominant_integral(const RootSystem& rs, const WeightVector& lambda, const char* who) {
  if (lambda.rank() != rs.rank())
    throw std::invalid_argument(std::string(who) + ": weight rank mismatch");
  if (!lambda.is_integral())
    throw std::invalid_argument(std::string(who) + ": weight is not integral: " + lambda.str());
  if (!lambda.is_dominant())
    throw std::invalid_argument(std::string(who) + ": weight is not dominant: " + lambda.str());
}

// lambda - mu expanded over the simple roots with all coordinates
// nonnegative integers, i.e. mu lies below lambda in the root order.
bool below(const RootSystem& rs, const WeightVector& lambda, const WeightVector& mu) {
  std::vector<Rat> c = rs.to_root_basis(lambda - mu);
  for (const Rat& x : c)
    if (!is_integer(x) || x < 0) return false;
  return true;
}

}  // namespace

Character Character::trivial(const RootSystem& rs) {
  std::map<WeightVector, long long> t;
  t[WeightVector(rs.rank())] = 1;
  return Character(rs, std::move(t));
}

Character Character::adjoint(const RootSystem& rs) {
  std::map<WeightVector, long long> t;
  for (const WeightVector& beta : rs.roots()) t[beta] = 1;
  t[WeightVector(rs.rank())] = rs.rank();
  return Character(rs, std::move(t));
}

void set_character_disk_hooks(CharacterDiskHooks hooks) {
  std::lock_guard<std::mutex> lock(irr_memo().mu);
  irr_memo().disk = std::move(hooks);
}

void clear_character_disk_hooks() {
  std::lock_guard<std::mutex> lock(irr_memo().mu);
  irr_memo().disk = {};
}

Character Character::irreducible(const RootSystem& rs, const WeightVector& lambda) {
  require_dominant_integral(rs, lambda, "irreducible_character");
  auto key = std::make_pair(rs.type().name(), lambda);
  {
    std::lock_guard<std::mutex> lock(irr_memo().mu);
    auto it = irr_memo().table.find(key);
    if (it != irr_memo().table.end()) return Character(rs, it->second);
    if (irr_memo().disk.load) {
      auto loaded = irr_memo().disk.load(rs.type(), lambda);
      if (loaded) {
        irr_memo().table.emplace(key, *loaded);
        return Character(rs, std::move(*loaded));
      }
    }
  }

  // enumerate the weight hull of V(lambda): all mu with dom(mu) below lambda
  std::vector<WeightVector> hull;
  std::set<WeightVector> seen;
  std::deque<WeightVector> queue;
  seen.insert(lambda);
  queue.push_back(lambda);
  while (!queue.empty()) {
    WeightVector w = queue.front();
    queue.pop_front();
    hull.push_back(w);
    for (int i = 0; i < rs.rank(); ++i) {
      WeightVector next = w - rs.simple_roots()[i];
      if (seen.count(next)) continue;
      if (!below(rs, lambda, rs.dominant_representative(next))) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }

  // Freudenthal recursion on the dominant weights, by decreasing height
  std::vector<WeightVector> dominant;
  for (const WeightVector& w : hull)
    if (w.is_dominant()) dominant.push_back(w);
  std::sort(dominant.begin(), dominant.end(), [&rs](const WeightVector& a, const WeightVector& b) {
    Rat ha = rs.height(a), hb = rs.height(b);
    int c = cmp(ha, hb);
    if (c != 0) return c > 0;
    return b < a;
  });

  const WeightVector& rho = rs.weyl_vector();
  Rat top_norm = rs.inner(lambda + rho, lambda + rho);
  std::map<WeightVector, long long> mult;
  for (const WeightVector& mu : dominant) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rat sum(0);
    for (const WeightVector& beta : rs.positive_roots()) {
      WeightVector w = mu;
      while (true) {
        w += beta;
        if (!seen.count(w)) break;
        auto it = mult.find(rs.dominant_representative(w));
        if (it == mult.end() || it->second == 0) continue;
        sum += rat_ll(it->second) * rs.inner(w, beta);
      }
    }
    Rat denom = top_norm - rs.inner(mu + rho, mu + rho);
    if (denom == 0) throw std::logic_error("Freudenthal denominator vanished");
    long long m = to_long(2 * sum / denom);
    if (m < 0) throw std::logic_error("negative Freudenthal multiplicity");
    if (m > 0) mult[mu] = m;
  }

  std::map<WeightVector, long long> terms;
  for (const auto& [mu, m] : mult)
    for (const WeightVector& w : rs.weyl_orbit(mu)) terms[w] = m;

  // the product formula is an independent route to the total dimension
  long long total = 0;
  for (const auto& [w, m] : terms) total += m;
  if (total != weyl_dimension(rs, lambda))
    throw std::logic_error("character dimension disagrees with the Weyl formula at " + lambda.str());

  {
    std::lock_guard<std::mutex> lock(irr_memo().mu);
    irr_memo().table.emplace(key, terms);
    if (irr_memo().disk.store) irr_memo().disk.store(rs.type(), lambda, terms);
  }
  return Character(rs, std::move(terms));
}

long long Character::multiplicity(const WeightVector& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

long long Character::dimension() const {
  long long d = 0;
  for (const auto& [w, m] : terms_) d += m;
  return d;
}

bool Character::is_weyl_invariant() const {
  for (const auto& [w, m] : terms_)
    for (int i = 0; i < rs_->rank(); ++i)
      if (multiplicity(rs_->simple_reflect(w, i)) != m) return false;
  return true;
}

Character& Character::operator+=(const Character& o) { return add_scaled(o, 1); }
Character& Character::operator-=(const Character& o) { return add_scaled(o, -1); }

Character& Character::add_scaled(const Character& o, long long factor) {
  if (rs_->type() != o.rs_->type()) throw std::invalid_argument("characters over different root systems");
  for (const auto& [w, m] : o.terms_) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if (m * factor != 0) terms_[w] = m * factor;
    } else {
      it->second += m * factor;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

void Character::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

Character Character::tensor(const Character& o) const {
  if (rs_->type() != o.rs_->type())
    throw std::invalid_argument("tensor of characters over different root systems");
  std::map<WeightVector, long long> out;
  for (const auto& [w1, m1] : terms_)
    for (const auto& [w2, m2] : o.terms_) out[w1 + w2] += m1 * m2;
  return Character(*rs_, std::move(out));
}

std::pair<Character, Character> Character::sym2_alt2() const {
  for (const auto& [w, m] : terms_)
    if (m < 0) throw std::invalid_argument("sym2_alt2 needs a genuine character");
  Decomposition probe = decompose(*this);
  if (probe.summands.size() != 1 || probe.summands.begin()->second != 1)
    throw std::invalid_argument("sym2_alt2 needs an irreducible character");
  std::vector<std::pair<WeightVector, long long>> list(terms_.begin(), terms_.end());
  std::map<WeightVector, long long> sym, alt;
  for (size_t i = 0; i < list.size(); ++i) {
    // equal-weight pairs: m(m+1)/2 symmetric, m(m-1)/2 alternating
    long long m = list[i].second;
    WeightVector dbl = list[i].first + list[i].first;
    sym[dbl] += m * (m + 1) / 2;
    if (m >= 2) alt[dbl] += m * (m - 1) / 2;
    for (size_t j = i + 1; j < list.size(); ++j) {
      WeightVector s = list[i].first + list[j].first;
      long long mm = m * list[j].second;
      sym[s] += mm;
      alt[s] += mm;
    }
  }
  return {Character(*rs_, std::move(sym)), Character(*rs_, std::move(alt))};
}

Rat Character::evaluate(const std::vector<Rat>& t) const {
  if (static_cast<int>(t.size()) != rs_->rank())
    throw std::invalid_argument("torus point rank mismatch");
  Rat acc(0);
  for (const auto& [w, m] : terms_) {
    Rat mono(1);
    for (int i = 0; i < rs_->rank(); ++i) mono *= rat_pow(t[i], to_long(w.coords[i]));
    acc += rat_ll(m) * mono;
  }
  return acc;
}

long long weyl_dimension(const RootSystem& rs, const WeightVector& lambda) {
  require_dominant_integral(rs, lambda, "weyl_dimension");
  const WeightVector& rho = rs.weyl_vector();
  WeightVector shifted = lambda + rho;
  Rat num(1), den(1);
  for (const WeightVector& beta : rs.positive_roots()) {
    num *= rs.inner(shifted, beta);
    den *= rs.inner(rho, beta);
  }
  return to_long(num / den);
}

long long Decomposition::trivial_multiplicity() const {
  for (const auto& [w, m] : summands)
    if (w.is_zero()) return m;
  return 0;
}

Decomposition decompose(const Character& c) {
  const RootSystem& rs = c.root_system();
  if (!c.is_weyl_invariant())
    throw std::domain_error("malformed character: not Weyl-invariant");

  // working copy keyed by (height, weight) so the maximal weight is at the back
  std::map<std::pair<Rat, WeightVector>, long long> work;
  for (const auto& [w, m] : c.terms()) work[{rs.height(w), w}] = m;

  Decomposition out;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    WeightVector mu = top->first.second;
    long long m = top->second;
    if (m < 0)
      throw std::domain_error("malformed character: negative multiplicity at " + mu.str());
    if (!mu.is_dominant())
      throw std::domain_error("malformed character: maximal weight " + mu.str() + " not dominant");
    if (!mu.is_integral())
      throw std::domain_error("malformed character: non-integral weight " + mu.str());
    Character irr = Character::irreducible(rs, mu);
    for (const auto& [w, mw] : irr.terms()) {
      auto key = std::make_pair(rs.height(w), w);
      auto it = work.find(key);
      long long next = (it == work.end() ? 0 : it->second) - m * mw;
      if (next == 0) {
        if (it != work.end()) work.erase(it);
      } else {
        work[key] = next;
      }
    }
    out.summands[mu] += m;
  }
  return out;
}

Character rebuild(const RootSystem& rs, const Decomposition& d) {
  Character acc(rs);
  for (const auto& [w, m] : d.summands) acc.add_scaled(Character::irreducible(rs, w), m);
  return acc;
}

std::string form_type_name(FormType f) {
  switch (f) {
    case FormType::ORTHOGONAL: return "orthogonal";
    case FormType::SYMPLECTIC: return "symplectic";
    case FormType::NEITHER: return "neither";
  }
  return "?";
}

std::string IrrepRecord::weight_str() const {
  std::string s;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (i) s += " (x) ";
    s += weights[i].str();
  }
  return s.empty() ? "()" : s;
}

namespace {

// One representative per isomorphism class of simple algebras:
// C2 stands for the rank-2 B/C class, A3 for D3.
std::vector<SimpleType> algebra_class_representatives(int max_rank) {
  std::vector<SimpleType> out;
  for (int r = 1; r <= max_rank; ++r)
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
      SimpleType t{f, r};
      if (!is_valid(t)) continue;
      if (t.family == Family::B && t.rank == 2) continue;  // = C2
      if (t.family == Family::D && t.rank == 3) continue;  // = A3
      out.push_back(t);
    }
  return out;
}

void search_weights(const RootSystem& rs, long long d, WeightVector& partial, int from,
                    std::vector<WeightVector>& found) {
  long long dim = weyl_dimension(rs, partial);
  if (dim > d) return;
  if (dim == d) found.push_back(partial);
  // the dimension is strictly monotone in every coordinate
  for (int i = from; i < rs.rank(); ++i) {
    while (true) {
      partial.coords[i] += 1;
      if (weyl_dimension(rs, partial) > d) break;
      search_weights(rs, d, partial, i + 1, found);
    }
    partial.coords[i] = 0;
  }
}

WeightVector canonical_under_diagram(const RootSystem& rs, const WeightVector& w,
                                     const std::vector<DiagramAutomorphism>& autos) {
  WeightVector best = w;
  for (const DiagramAutomorphism& d : autos) {
    WeightVector img(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) img.coords[d.node_permutation[i]] = w.coords[i];
    if (img < best) best = img;
  }
  return best;
}

FormType form_of(const RootSystem& rs, const WeightVector& lambda) {
  if (!(rs.dominant_representative(-lambda) == lambda)) return FormType::NEITHER;
  Character c = Character::irreducible(rs, lambda);
  auto [sym, alt] = c.sym2_alt2();
  if (decompose(sym).trivial_multiplicity() > 0) return FormType::ORTHOGONAL;
  if (decompose(alt).trivial_multiplicity() > 0) return FormType::SYMPLECTIC;
  throw std::logic_error("selfdual irreducible with no invariant form");
}

}  // namespace

std::vector<IrrepRecord> enumerate_irreps_of_dim(long long d, int max_rank, bool allow_products) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (max_rank < 1) throw std::invalid_argument("max_rank must be positive");

  std::vector<IrrepRecord> out;
  if (d == 1) {
    IrrepRecord rec;
    rec.algebra = "trivial";
    rec.dim = 1;
    rec.form = FormType::ORTHOGONAL;
    out.push_back(std::move(rec));
    return out;
  }

  // simple factors of every dimension dividing d, reused for products
  std::map<long long, std::vector<std::pair<SimpleType, WeightVector>>> simple_of_dim;
  for (long long k = 2; k <= d; ++k) {
    if (d % k != 0) continue;
    for (const SimpleType& t : algebra_class_representatives(max_rank)) {
      RootSystem rs = RootSystem::build(t);
      std::vector<WeightVector> found;
      WeightVector zero(rs.rank());
      search_weights(rs, k, zero, 0, found);
      auto autos = rs.diagram_automorphisms();
      std::set<WeightVector> canon;
      for (const WeightVector& w : found) {
        if (w.is_zero()) continue;  // trivial rep has infinite kernel over a simple algebra
        canon.insert(canonical_under_diagram(rs, w, autos));
      }
      for (const WeightVector& w : canon) simple_of_dim[k].emplace_back(t, w);
    }
  }

  for (const auto& [t, w] : simple_of_dim[d]) {
    RootSystem rs = RootSystem::build(t);
    IrrepRecord rec;
    rec.algebra = t.name();
    rec.factors = {t};
    rec.weights = {w};
    rec.dim = d;
    rec.form = form_of(rs, w);
    out.push_back(std::move(rec));
  }

  if (allow_products) {
    std::vector<std::pair<std::pair<SimpleType, WeightVector>, std::pair<SimpleType, WeightVector>>> pairs;
    for (long long d1 = 2; d1 * d1 <= d; ++d1) {
      if (d % d1 != 0) continue;
      long long d2 = d / d1;
      for (const auto& f1 : simple_of_dim[d1])
        for (const auto& f2 : simple_of_dim[d2]) {
          if (f1.first.rank + f2.first.rank > max_rank) continue;
          if (d1 == d2) {
            auto key1 = std::make_pair(f1.first.name(), f1.second);
            auto key2 = std::make_pair(f2.first.name(), f2.second);
            if (key2 < key1) continue;  // unordered pair
          }
          pairs.emplace_back(f1, f2);
        }
    }
    for (const auto& [f1, f2] : pairs) {
      RootSystem rs1 = RootSystem::build(f1.first), rs2 = RootSystem::build(f2.first);
      FormType t1 = form_of(rs1, f1.second), t2 = form_of(rs2, f2.second);
      IrrepRecord rec;
      rec.algebra = f1.first.name() + " x " + f2.first.name();
      rec.factors = {f1.first, f2.first};
      rec.weights = {f1.second, f2.second};
      rec.dim = d;
      if (t1 == FormType::NEITHER || t2 == FormType::NEITHER)
        rec.form = FormType::NEITHER;
      else if (t1 == t2)
        rec.form = FormType::ORTHOGONAL;
      else
        rec.form = FormType::SYMPLECTIC;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace dimdata
