#include "dimdata/embed.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace dimdata {

AdjointEmbedding build_adjoint_embedding(const RootSystem& h) {
  if (h.rank() % 2 != 0)
    throw std::invalid_argument("adjoint embedding needs even rank (assumption A); " +
                                h.type().name() + " has rank " + std::to_string(h.rank()));
  AdjointEmbedding e;
  e.h = h;
  long dim = h.dim_lie_algebra();
  e.g_rank = static_cast<int>(dim / 2);
  e.restriction_columns = h.positive_roots();
  for (int k = 0; k < h.rank() / 2; ++k) e.restriction_columns.push_back(WeightVector(h.rank()));
  e.twisted = false;
  e.twist_index = -1;
  return e;
}

AdjointEmbedding twist_odd(const AdjointEmbedding& e) {
  AdjointEmbedding t = e;
  int idx = static_cast<int>(e.h.positive_roots().size()) - 1;  // the highest root column
  t.restriction_columns[idx] = -t.restriction_columns[idx];
  t.twisted = !e.twisted;
  t.twist_index = t.twisted ? idx : -1;
  return t;
}

std::vector<Rat> d_weight_to_eps(int n, const WeightVector& w) {
  if (w.rank() != n) throw std::invalid_argument("weight rank does not match D_N rank");
  // eps_j = a_j + ... + a_{n-2} + (a_{n-1}+a_n)/2 for j <= n-1,
  // eps_n = (a_n - a_{n-1})/2
  std::vector<Rat> eps(n, Rat(0));
  Rat half_sum = (w.coords[n - 2] + w.coords[n - 1]) / 2;
  Rat acc(0);
  for (int j = n - 2; j >= 0; --j) {
    eps[j] = acc + half_sum;
    if (j > 0) acc += w.coords[j - 1];
  }
  eps[n - 1] = (w.coords[n - 1] - w.coords[n - 2]) / 2;
  return eps;
}

bool is_so_weight(int n, const WeightVector& w) {
  Rat s = w.coords[n - 2] + w.coords[n - 1];
  return is_integer(s) && mpz_even_p(s.get_num().get_mpz_t());
}

Character restrict_character(const AdjointEmbedding& e, const Character& c) {
  const RootSystem& dn = c.root_system();
  if (dn.type().family != Family::D || dn.rank() != e.g_rank)
    throw std::invalid_argument("character is not over D_" + std::to_string(e.g_rank));
  int hr = e.h.rank();
  std::map<WeightVector, long long> out;
  for (const auto& [w, m] : c.terms()) {
    std::vector<Rat> eps = d_weight_to_eps(e.g_rank, w);
    WeightVector hw(hr);
    for (int j = 0; j < e.g_rank; ++j) {
      if (eps[j] == 0) continue;
      if (!is_integer(eps[j]))
        throw std::invalid_argument("half-spin weight " + w.str() +
                                    " is not an integral weight of SO(2N)");
      const WeightVector& col = e.restriction_columns[j];
      for (int i = 0; i < hr; ++i) hw.coords[i] += eps[j] * col.coords[i];
    }
    out[hw] += m;
  }
  return Character(e.h, std::move(out));
}

long long dim_fixed_space(const AdjointEmbedding& e, const RootSystem& dn,
                          const WeightVector& lambda_g) {
  Character cg = Character::irreducible(dn, lambda_g);
  Character ch = restrict_character(e, cg);
  return decompose(ch).trivial_multiplicity();
}

long long dim_fixed_space(const AdjointEmbedding& e, const WeightVector& lambda_g) {
  return dim_fixed_space(e, RootSystem::shared(e.d_type()), lambda_g);
}

std::vector<WeightVector> enumerate_so_weights(const RootSystem& dn, long long dim_bound) {
  if (dim_bound < 1) throw std::invalid_argument("dimension bound must be positive");
  int n = dn.rank();
  // lattice walk from 0, one unit step per coordinate; the Weyl dimension
  // is strictly monotone in every coordinate, so this reaches every
  // weight under the bound (half-spin points are stepping stones only)
  std::set<WeightVector> visited;
  std::deque<WeightVector> queue;
  WeightVector zero(n);
  visited.insert(zero);
  queue.push_back(zero);
  std::vector<WeightVector> found;
  while (!queue.empty()) {
    WeightVector w = queue.front();
    queue.pop_front();
    if (is_so_weight(n, w)) found.push_back(w);
    for (int i = 0; i < n; ++i) {
      WeightVector next = w;
      next.coords[i] += 1;
      if (visited.count(next)) continue;
      if (weyl_dimension(dn, next) > dim_bound) continue;
      visited.insert(next);
      queue.push_back(next);
    }
  }
  std::sort(found.begin(), found.end(), [&dn](const WeightVector& a, const WeightVector& b) {
    long long da = weyl_dimension(dn, a), db = weyl_dimension(dn, b);
    if (da != db) return da < db;
    return a < b;
  });
  return found;
}

std::vector<DimensionDatum> dimension_data_table(const AdjointEmbedding& e, long long dim_bound) {
  const RootSystem& dn = RootSystem::shared(e.d_type());
  std::vector<DimensionDatum> out;
  for (const WeightVector& w : enumerate_so_weights(dn, dim_bound)) {
    DimensionDatum d;
    d.g_highest_weight = w;
    d.g_dimension = weyl_dimension(dn, w);
    d.fixed_dim = dim_fixed_space(e, dn, w);
    out.push_back(std::move(d));
  }
  return out;
}

DimensionDataReport verify_dimension_data_equal(const RootSystem& h, long long dim_bound) {
  AdjointEmbedding i = build_adjoint_embedding(h);
  AdjointEmbedding ip = twist_odd(i);
  const RootSystem& dn = RootSystem::shared(i.d_type());

  DimensionDataReport rep;
  rep.h_type = h.type();
  rep.g_rank = i.g_rank;
  rep.dim_bound = dim_bound;
  for (const WeightVector& w : enumerate_so_weights(dn, dim_bound)) {
    DimensionDataRow row;
    row.g_highest_weight = w;
    row.g_dimension = weyl_dimension(dn, w);
    row.fixed_untwisted = dim_fixed_space(i, dn, w);
    row.fixed_twisted = dim_fixed_space(ip, dn, w);
    if (!row.equal()) ++rep.discrepancies;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace dimdata
