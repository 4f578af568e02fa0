/**
 * Catalog files: newline-delimited JSON.  The first line is a header
 *   {"g":..,"n":..,"version":..,"records":..,"pending_edges":..,"checksum":".."}
 * and each further line is one class in the graph JSON schema, extended
 * with "aut", "odd" and "rep" annotations.  The checksum is FNV-1a (64 bit,
 * lowercase hex) over the record lines, each terminated by '\n'.
 */
#ifndef TROPICELL_CATALOG_IO_HPP
#define TROPICELL_CATALOG_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "tropicell/enumerate.hpp"

namespace tropicell {

inline constexpr int kCatalogFormatVersion = 1;

class CatalogFormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 14695981039346656037ull);

void write_catalog(std::ostream& out, const GraphCatalog& catalog);

/// Throws CatalogFormatError on malformed input, version mismatch or bad checksum.
GraphCatalog read_catalog(std::istream& in);

/**
 * Resolution order: explicit directory, $TROPICELL_CACHE, $XDG_CACHE_HOME/tropicell,
 * $HOME/.cache/tropicell, ./.tropicell-cache.
 */
std::filesystem::path cache_directory(const std::optional<std::filesystem::path>& override_dir);

std::filesystem::path catalog_path(const std::filesystem::path& dir, int g, int n);
std::filesystem::path checkpoint_path(const std::filesystem::path& dir, int g, int n);

struct CacheOptions
{
    std::optional<std::filesystem::path> directory;
    bool use_cache = true;
};

/**
 * Load a complete catalog from the cache, or build it (resuming from a
 * checkpoint if one exists) and store it.  Corrupt cache files are rebuilt.
 * On ResourceLimitExceeded the checkpoint is written before rethrowing.
 */
GraphCatalog load_or_build_catalog(int g, int n, const CacheOptions& cache,
                                   const EnumerationOptions& options = {});

} // namespace tropicell

#endif
