#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "dimdata/liealg.hpp"
#include "dimdata/rootsys.hpp"

namespace dimdata::cache {

/// Bump when the structure-constant sign convention changes; stale cache
/// files are then ignored and regenerated.
inline constexpr const char* kConventionVersion = "chevalley-es-v1";

/// Resolution order for the directory: explicit flag, then the
/// DIMDATA_CACHE_DIR environment variable, then ~/.cache/dimdata.
void configure(bool enabled, const std::optional<std::string>& dir_flag);
bool enabled();
std::filesystem::path directory();

std::uint64_t fnv1a(const std::string& payload);

/// Structure table through the disk cache: loads when a valid checksummed
/// file exists, otherwise builds and stores. Corrupt files are rebuilt
/// silently. Equivalent to StructureTable::build in all observable ways.
StructureTable structure_table(const RootSystem& rs);

}  // namespace dimdata::cache
