#include "tropicell/catalog_io.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "tropicell/graph_json.hpp"

namespace tropicell {

namespace fs = std::filesystem;

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed)
{
    std::uint64_t h = seed;
    for (unsigned char c : data)
    {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string hex64(std::uint64_t value)
{
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << value;
    return os.str();
}

} // namespace

void write_catalog(std::ostream& out, const GraphCatalog& catalog)
{
    std::vector<std::string> lines;
    std::uint64_t checksum = fnv1a("");
    for (int p = 0; p < catalog.num_degrees(); ++p)
    {
        for (const auto& entry : catalog.cells(p))
        {
            nlohmann::json record = graph_to_json(entry.graph);
            record["aut"] = entry.automorphisms;
            record["odd"] = entry.odd_automorphism;
            record["rep"] = entry.repeated_marking;
            lines.push_back(record.dump());
            checksum = fnv1a(lines.back() + "\n", checksum);
        }
    }
    nlohmann::json header = {{"g", catalog.genus()},
                             {"n", catalog.markings()},
                             {"version", kCatalogFormatVersion},
                             {"records", lines.size()},
                             {"pending_edges", catalog.pending_edges()},
                             {"checksum", hex64(checksum)}};
    out << header.dump() << '\n';
    for (const auto& line : lines)
        out << line << '\n';
}

GraphCatalog read_catalog(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw CatalogFormatError("catalog file is empty");

    nlohmann::json header;
    int g = 0, n = 0, pending = 0;
    std::size_t records = 0;
    std::string expected_checksum;
    try
    {
        header = nlohmann::json::parse(line);
        if (header.at("version").get<int>() != kCatalogFormatVersion)
            throw CatalogFormatError("catalog format version mismatch");
        g = header.at("g").get<int>();
        n = header.at("n").get<int>();
        records = header.at("records").get<std::size_t>();
        pending = header.value("pending_edges", 0);
        expected_checksum = header.at("checksum").get<std::string>();
    }
    catch (const nlohmann::json::exception& err)
    {
        throw CatalogFormatError(std::string("bad catalog header: ") + err.what());
    }

    GraphCatalog catalog;
    try
    {
        catalog = GraphCatalog(g, n);
    }
    catch (const std::invalid_argument& err)
    {
        throw CatalogFormatError(err.what());
    }

    std::vector<std::vector<CatalogEntry>> buckets(catalog.num_degrees());
    std::uint64_t checksum = fnv1a("");
    std::size_t count = 0;
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        checksum = fnv1a(line + "\n", checksum);
        ++count;
        try
        {
            const auto record = nlohmann::json::parse(line);
            MarkedWeightedGraph graph = graph_from_json(record);
            CanonicalForm canon = canonicalize(graph);
            if (canon.graph != graph)
                throw CatalogFormatError("catalog record is not a canonical representative");
            const int degree = graph.num_edges() - 1;
            if (degree < 0 || degree >= catalog.num_degrees() || graph.num_markings() != n ||
                genus(graph) != g || !is_stable(graph))
                throw CatalogFormatError("catalog record does not belong to J_{g,n}");
            CatalogEntry entry = make_entry(std::move(graph), std::move(canon.key));
            if (entry.automorphisms != record.at("aut").get<std::uint64_t>() ||
                entry.odd_automorphism != record.at("odd").get<bool>() ||
                entry.repeated_marking != record.at("rep").get<bool>())
                throw CatalogFormatError("catalog annotations disagree with the graph");
            buckets[degree].push_back(std::move(entry));
        }
        catch (const nlohmann::json::exception& err)
        {
            throw CatalogFormatError(std::string("bad catalog record: ") + err.what());
        }
        catch (const GraphError& err)
        {
            throw CatalogFormatError(std::string("bad catalog record: ") + err.what());
        }
    }
    if (count != records)
        throw CatalogFormatError("catalog record count mismatch");
    if (hex64(checksum) != expected_checksum)
        throw CatalogFormatError("catalog checksum mismatch");

    try
    {
        for (int p = 0; p < catalog.num_degrees(); ++p)
            catalog.set_cells(p, std::move(buckets[p]));
    }
    catch (const std::invalid_argument& err)
    {
        throw CatalogFormatError(err.what());
    }
    catalog.set_pending_edges(pending);
    return catalog;
}

fs::path cache_directory(const std::optional<fs::path>& override_dir)
{
    if (override_dir)
        return *override_dir;
    if (const char* env = std::getenv("TROPICELL_CACHE"); env && *env)
        return fs::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return fs::path(xdg) / "tropicell";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "tropicell";
    return fs::path(".tropicell-cache");
}

fs::path catalog_path(const fs::path& dir, int g, int n)
{
    std::ostringstream os;
    os << "catalog_g" << g << "_n" << n << "_v" << kCatalogFormatVersion << ".ndjson";
    return dir / os.str();
}

fs::path checkpoint_path(const fs::path& dir, int g, int n)
{
    fs::path p = catalog_path(dir, g, n);
    p += ".partial";
    return p;
}

namespace {

std::optional<GraphCatalog> try_load(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    try
    {
        return read_catalog(in);
    }
    catch (const CatalogFormatError&)
    {
        return std::nullopt;
    }
}

void store(const fs::path& path, const GraphCatalog& catalog)
{
    fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw std::runtime_error("cannot write cache file " + tmp.string());
        write_catalog(out, catalog);
        if (!out)
            throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    fs::rename(tmp, path);
}

} // namespace

GraphCatalog load_or_build_catalog(int g, int n, const CacheOptions& cache,
                                   const EnumerationOptions& options)
{
    check_parameters(g, n);
    if (!cache.use_cache)
        return enumerate_all(g, n, options);

    const fs::path dir = cache_directory(cache.directory);
    const fs::path path = catalog_path(dir, g, n);
    if (auto loaded = try_load(path);
        loaded && loaded->genus() == g && loaded->markings() == n && loaded->pending_edges() == 0)
        return std::move(*loaded);

    const fs::path partial = checkpoint_path(dir, g, n);
    try
    {
        GraphCatalog catalog;
        auto checkpoint = try_load(partial);
        if (checkpoint && checkpoint->genus() == g && checkpoint->markings() == n &&
            checkpoint->pending_edges() > 0)
            catalog = resume_enumeration(std::move(*checkpoint), options);
        else
            catalog = enumerate_all(g, n, options);
        store(path, catalog);
        std::error_code ignored;
        fs::remove(partial, ignored);
        return catalog;
    }
    catch (const ResourceLimitExceeded& limit)
    {
        if (limit.checkpoint().pending_edges() > 0)
            store(partial, limit.checkpoint());
        throw;
    }
}

} // namespace tropicell
