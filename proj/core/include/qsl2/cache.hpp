#pragma once

#include <filesystem>

#include "qsl2/coalgebra.hpp"

namespace qsl2 {

/// QSL2_CACHE_DIR, or ./.qsl2-cache when unset.
std::filesystem::path cache_dir();

std::filesystem::path gamma_cache_path(int m, int n, const std::string& mode = "exact");

/// Write-to-temporary-then-atomic-rename; returns false (with a warning on
/// stderr) when the cache directory is unusable.
bool store_gamma(const GammaTable& tab, const std::string& mode = "exact");

/// Load the cached table if present and valid (the validation identity is
/// re-verified); otherwise compute, store and return it. Corrupt entries are
/// recomputed and overwritten with a warning.
GammaTable gamma_table_disk_cached(int m, int n, const std::string& mode = "exact");

} // namespace qsl2
