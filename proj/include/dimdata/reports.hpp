#pragma once

#include <string>

#include "dimdata/conjugacy.hpp"
#include "dimdata/embed.hpp"
#include "dimdata/liealg.hpp"
#include "dimdata/repchar.hpp"
#include "dimdata/rootsys.hpp"
#include "json.hpp"

namespace dimdata::reports {

using json = nlohmann::ordered_json;

inline constexpr const char* kLibraryVersion = "dimdata 0.1.0";

json weight_json(const WeightVector& w);                  // ["2", "-1/3", ...]
json root_system_json(const RootSystem& rs);              // the `dump` payload
json character_json(const Character& c);                  // [(coords, mult), ...]
std::string decomposition_csv(const RootSystem& rs, const Decomposition& d);

json classification_json(const std::vector<ClassifiedType>& rows);
json obstruction_json(const ObstructionReport& rep);
json local_conjugacy_json(const LocalConjugacyReport& rep);
json dimension_data_json(const DimensionDataReport& rep);
std::string dimension_data_csv(const DimensionDataReport& rep);
json irreps_json(const std::vector<IrrepRecord>& recs);
json matrix_json(const Mat<GaussRat>& m);                 // entries "a+bi"

}  // namespace dimdata::reports
