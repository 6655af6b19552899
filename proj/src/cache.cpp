#include "lma/cache.hpp"

#include <cstdlib>
#include <fstream>

namespace lma {

namespace fs = std::filesystem;

fs::path cache_dir() {
  if (const char* env = std::getenv("LM_ATLAS_CACHE_DIR"); env && *env)
    return fs::path(env);
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "lm-atlas";
  return fs::path(".lm-atlas-cache");
}

namespace {

fs::path entry_path(const AffineWeyl& ctx, long long bound,
                    const OmegaClass* restrict_class) {
  std::string name = ctx.datum().type().to_string() + "_" +
                     lattice_name(ctx.datum().lattice()) + "_b" +
                     std::to_string(bound);
  if (restrict_class) name += "_omega" + std::to_string(restrict_class->index);
  name += "_v" + std::to_string(BoundedWindow::format_version()) + ".win";
  return cache_dir() / name;
}

}  // namespace

BoundedWindow cached_window(const AffineWeyl& ctx, long long bound,
                            std::uint64_t budget, const OmegaClass* restrict_class) {
  fs::path path = entry_path(ctx, bound, restrict_class);
  std::error_code ec;
  if (fs::exists(path, ec)) {
    std::ifstream in(path, std::ios::binary);
    std::vector<std::uint8_t> blob((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    if (auto win = BoundedWindow::deserialize(ctx, blob); win && win->bound() == bound)
      return std::move(*win);
  }
  BoundedWindow win = BoundedWindow::build(ctx, bound, budget, restrict_class);
  fs::create_directories(cache_dir(), ec);
  if (!ec) {
    std::vector<std::uint8_t> blob = win.serialize(ctx);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(blob.data()),
              static_cast<std::streamsize>(blob.size()));
  }
  return win;
}

CacheStat cache_stat() {
  CacheStat stat;
  stat.dir = cache_dir();
  std::error_code ec;
  if (!fs::exists(stat.dir, ec)) return stat;
  for (const auto& entry : fs::directory_iterator(stat.dir, ec)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".win") continue;
    ++stat.entries;
    stat.bytes += entry.file_size();
  }
  return stat;
}

std::size_t cache_clear() {
  std::error_code ec;
  std::size_t removed = 0;
  if (!fs::exists(cache_dir(), ec)) return 0;
  for (const auto& entry : fs::directory_iterator(cache_dir(), ec)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".win") continue;
    if (fs::remove(entry.path(), ec)) ++removed;
  }
  return removed;
}

}  // namespace lma
