#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fqsum/counting.hpp"

namespace fqsum {

std::filesystem::path irreducible_cache_path(const std::filesystem::path& dir,
                                             const FieldOrder& q, unsigned max_degree);
std::filesystem::path smooth_cache_path(const std::filesystem::path& dir, const FieldOrder& q,
                                        unsigned k_max, unsigned smoothness);

void save_irreducible(const std::filesystem::path& dir, const IrreducibleCountTable& table);
/// Throws std::runtime_error on missing file, schema mismatch, or failed
/// invariant revalidation.
IrreducibleCountTable load_irreducible(const std::filesystem::path& dir, const FieldOrder& q,
                                       unsigned max_degree);
/// Loads when a valid cache file exists, otherwise builds and saves.
/// A corrupt file is rebuilt, never trusted.
IrreducibleCountTable load_or_build_irreducible(const std::filesystem::path& dir,
                                                const FieldOrder& q, unsigned max_degree);

void save_smooth(const std::filesystem::path& dir, const SmoothCountTable& table);
SmoothCountTable load_smooth(const std::filesystem::path& dir, const FieldOrder& q,
                             unsigned k_max, unsigned smoothness, unsigned n_max,
                             const IrreducibleCountTable& irr);
SmoothCountTable load_or_build_smooth(const std::filesystem::path& dir, const FieldOrder& q,
                                      unsigned k_max, unsigned smoothness, unsigned n_max,
                                      const IrreducibleCountTable& irr);

struct CacheEntryInfo {
    std::string file;
    std::string kind;
    unsigned long q = 0;
    std::string params;
    bool valid = false;
    std::string detail;
};

/// Parses and revalidates every cache file under dir.
std::vector<CacheEntryInfo> inspect_cache(const std::filesystem::path& dir);

}  // namespace fqsum
