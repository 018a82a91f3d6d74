// On-disk cache of character tables, one JSON file per
// (kind, n, p, f, side, version).
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "distlab/character_table.hpp"

namespace distlab {

inline constexpr int kCacheFormatVersion = 1;

struct CacheKey {
  GroupKind kind = GroupKind::GL;
  int n = 0, p = 0, f = 0;
  Side side = Side::Ext;
  int version = kCacheFormatVersion;

  static CacheKey of(const MatrixGroup& g, int version = kCacheFormatVersion);
  std::string file_name() const;
};

/// FNV-1a over the class data the table is indexed by.
std::uint64_t class_digest(const MatrixGroup& g, const ConjugacyClasses& cc);

std::string table_to_text(const CharacterTable& t);
/// Parse and fully validate; nullopt (with a reason) on any mismatch.
std::optional<TablePtr> table_from_text(const std::string& text, GroupPtr g, ClassesPtr cc, std::string* why);

/// DISTLAB_CACHE_DIR or empty (caching off).
std::string default_cache_dir();

std::optional<TablePtr> cache_read(const std::string& dir, GroupPtr g, ClassesPtr cc, std::string* why = nullptr);
void cache_write(const std::string& dir, const CharacterTable& t);

/// Cached table if a valid one exists, else compute and store it.
TablePtr cached_character_table(GroupPtr g, ClassesPtr cc, const std::string& dir, const DixonOptions& opts = {},
                                std::string* note = nullptr);

}  // namespace distlab
