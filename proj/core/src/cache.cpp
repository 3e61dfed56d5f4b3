#include "qsl2/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "qsl2/json_io.hpp"

namespace qsl2 {

namespace fs = std::filesystem;

fs::path cache_dir() {
  if (const char* env = std::getenv("QSL2_CACHE_DIR"); env && *env) return fs::path(env);
  return fs::path(".qsl2-cache");
}

fs::path gamma_cache_path(int m, int n, const std::string& mode) {
  return cache_dir() /
         ("gamma_m" + std::to_string(m) + "_n" + std::to_string(n) + "_" + mode + ".json");
}

bool store_gamma(const GammaTable& tab, const std::string& mode) {
  const fs::path target = gamma_cache_path(tab.m, tab.n, mode);
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  static std::mt19937_64 rng(std::random_device{}());
  const fs::path tmp = target.parent_path() /
                       (target.filename().string() + ".tmp." + std::to_string(rng()));
  {
    std::ofstream out(tmp);
    if (!out) {
      std::cerr << "qsl2: warning: cache dir not writable, keeping table in memory only\n";
      return false;
    }
    out << to_json(tab).dump(2) << '\n';
    if (!out) {
      std::cerr << "qsl2: warning: failed writing gamma cache file\n";
      out.close();
      fs::remove(tmp, ec);
      return false;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    std::cerr << "qsl2: warning: failed to publish gamma cache file: " << ec.message() << '\n';
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

GammaTable gamma_table_disk_cached(int m, int n, const std::string& mode) {
  const fs::path path = gamma_cache_path(m, n, mode);
  if (fs::exists(path)) {
    try {
      std::ifstream in(path);
      json j;
      in >> j;
      GammaTable tab = gamma_from_json(j);
      if (tab.m == m && tab.n == n && validate_gamma(tab)) return tab;
      std::cerr << "qsl2: warning: cached gamma(" << m << "," << n
                << ") failed validation, recomputing\n";
    } catch (const std::exception& e) {
      std::cerr << "qsl2: warning: corrupt gamma cache entry (" << e.what() << "), recomputing\n";
    }
  }
  GammaTable tab = gamma_table(m, n);
  store_gamma(tab, mode);
  return tab;
}

} // namespace qsl2
