#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "lma/affine.hpp"

namespace lma {

// Cache directory: LM_ATLAS_CACHE_DIR if set, else ~/.cache/lm-atlas, else
// ./.lm-atlas-cache. Created on first store.
std::filesystem::path cache_dir();

// Load-or-build a window; stores freshly built windows. The cache is a pure
// accelerator: a stale/corrupt/mismatched entry is ignored and rebuilt.
BoundedWindow cached_window(const AffineWeyl& ctx, long long bound,
                            std::uint64_t budget = 5'000'000,
                            const OmegaClass* restrict_class = nullptr);

struct CacheStat {
  std::filesystem::path dir;
  std::size_t entries = 0;
  std::uintmax_t bytes = 0;
};

CacheStat cache_stat();
// Removes all cache entries; returns how many were deleted.
std::size_t cache_clear();

}  // namespace lma
