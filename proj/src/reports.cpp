#include "dimdata/reports.hpp"

#include <sstream>

namespace dimdata::reports {

json weight_json(const WeightVector& w) {
  json a = json::array();
  for (const Rat& c : w.coords) a.push_back(rat_to_string(c));
  return a;
}

json root_system_json(const RootSystem& rs) {
  json doc;
  doc["type"] = rs.type().name();
  doc["rank"] = rs.rank();
  doc["dim_lie_algebra"] = rs.dim_lie_algebra();
  json cartan = json::array();
  for (const auto& row : rs.cartan()) {
    json r = json::array();
    for (long v : row) r.push_back(v);
    cartan.push_back(std::move(r));
  }
  doc["cartan"] = std::move(cartan);
  json roots = json::array();
  for (const WeightVector& r : rs.roots()) roots.push_back(weight_json(r));
  doc["roots"] = std::move(roots);
  json pos = json::array();
  for (const WeightVector& r : rs.positive_roots()) pos.push_back(weight_json(r));
  doc["positive_roots"] = std::move(pos);
  doc["weyl_vector"] = weight_json(rs.weyl_vector());
  json gram = json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rat_to_string(rs.inner_product().at(i, j)));
    gram.push_back(std::move(row));
  }
  doc["inner_product"] = std::move(gram);
  json autos = json::array();
  for (const DiagramAutomorphism& d : rs.diagram_automorphisms()) {
    json a;
    a["permutation"] = d.node_permutation;
    a["parity"] = d.parity;
    autos.push_back(std::move(a));
  }
  doc["diagram_automorphisms"] = std::move(autos);
  return doc;
}

json character_json(const Character& c) {
  json a = json::array();
  for (const auto& [w, m] : c.terms()) a.push_back(json::array({weight_json(w), m}));
  return a;
}

std::string decomposition_csv(const RootSystem& rs, const Decomposition& d) {
  std::ostringstream os;
  os << "highest_weight,dimension,multiplicity\n";
  for (const auto& [w, m] : d.summands)
    os << "\"" << w.str() << "\"," << weyl_dimension(rs, w) << "," << m << "\n";
  return os.str();
}

json classification_json(const std::vector<ClassifiedType>& rows) {
  json arr = json::array();
  for (const ClassifiedType& r : rows) {
    json row;
    row["type"] = r.type.name();
    row["verdict"] = verdict_name(r.verdict);
    if (r.b2_c2_alias) row["isomorphism_class"] = "B2=C2";
    arr.push_back(std::move(row));
  }
  return arr;
}

json obstruction_json(const ObstructionReport& rep) {
  json doc;
  doc["type"] = rep.type.name();
  doc["verdict"] = rep.obstructed ? "OBSTRUCTED" : ("FAILS:" + rep.failing);
  doc["note"] = rep.obstructed
                    ? "locally conjugate, not globally conjugate in image; obstructed per the "
                      "even-automorphism criterion"
                    : "no example of this type";
  json ing;
  for (const ObstructionIngredient& i : rep.ingredients) {
    json entry;
    entry["pass"] = i.pass;
    if (!i.detail.empty()) entry["detail"] = i.detail;
    ing[i.name] = std::move(entry);
  }
  doc["ingredients"] = std::move(ing);
  return doc;
}

json local_conjugacy_json(const LocalConjugacyReport& rep) {
  json doc;
  doc["type"] = rep.type.name();
  doc["samples"] = rep.samples;
  doc["seed"] = rep.seed;
  doc["failures"] = rep.failures;
  doc["min_eigenvalue_one_multiplicity"] = rep.min_one_multiplicity;
  doc["passed"] = rep.passed();
  return doc;
}

json dimension_data_json(const DimensionDataReport& rep) {
  json doc;
  doc["type"] = rep.h_type.name();
  doc["so_rank"] = rep.g_rank;
  doc["dim_bound"] = rep.dim_bound;
  json rows = json::array();
  for (const DimensionDataRow& r : rep.rows) {
    json row;
    row["highest_weight"] = weight_json(r.g_highest_weight);
    row["dimension"] = r.g_dimension;
    row["fixed_dim_i"] = r.fixed_untwisted;
    row["fixed_dim_i_twisted"] = r.fixed_twisted;
    row["equal"] = r.equal();
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  doc["discrepancies"] = rep.discrepancies;
  doc["twist"] = "negates the highest-root coordinate; one representative of the odd coset";
  return doc;
}

std::string dimension_data_csv(const DimensionDataReport& rep) {
  std::ostringstream os;
  os << "highest_weight,dimension,dim_fixed_i,dim_fixed_i_twisted,equal\n";
  for (const DimensionDataRow& r : rep.rows)
    os << "\"" << r.g_highest_weight.str() << "\"," << r.g_dimension << "," << r.fixed_untwisted
       << "," << r.fixed_twisted << "," << (r.equal() ? "yes" : "no") << "\n";
  return os.str();
}

json irreps_json(const std::vector<IrrepRecord>& recs) {
  json arr = json::array();
  for (const IrrepRecord& r : recs) {
    json row;
    row["algebra"] = r.algebra;
    json ws = json::array();
    for (const WeightVector& w : r.weights) ws.push_back(weight_json(w));
    row["highest_weights"] = std::move(ws);
    row["dim"] = r.dim;
    row["form"] = form_type_name(r.form);
    arr.push_back(std::move(row));
  }
  return arr;
}

json matrix_json(const Mat<GaussRat>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(gauss_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dimdata::reports
