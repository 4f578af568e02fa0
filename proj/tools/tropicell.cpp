// tropicell: command-line front end for Delta_{g,n} computations.
//
// stdout carries results only; progress goes to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource/integrity error.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropicell/catalog_io.hpp"
#include "tropicell/characters.hpp"
#include "tropicell/complex.hpp"
#include "tropicell/homology.hpp"
#include "tropicell/verify.hpp"

namespace fs = std::filesystem;
using namespace tropicell;

namespace {

enum Exit
{
    kOk = 0,
    kVerificationFailure = 1,
    kUsage = 2,
    kResource = 3
};

struct Common
{
    int g = -1;
    int n = -1;
    bool json = false;
    unsigned jobs = 0;
    bool no_cache = false;
    std::string cache_dir;
    std::size_t max_classes = 0;
    bool quiet = false;

    CacheOptions cache() const
    {
        CacheOptions c;
        c.use_cache = !no_cache;
        if (!cache_dir.empty())
            c.directory = fs::path(cache_dir);
        return c;
    }

    std::function<void(const std::string&)> progress() const
    {
        if (quiet)
            return {};
        return [](const std::string& msg) { std::cerr << "[tropicell] " << msg << std::endl; };
    }

    EnumerationOptions enumeration() const
    {
        EnumerationOptions e;
        e.jobs = jobs;
        e.max_classes = max_classes;
        e.progress = progress();
        return e;
    }

    GraphCatalog catalog() const { return load_or_build_catalog(g, n, cache(), enumeration()); }
};

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Common& c, bool needs_genus)
{
    if (needs_genus)
        cmd->add_option("-g,--genus", c.g, "genus g >= 0")->required();
    cmd->add_option("-n,--markings", c.n, "number of markings n >= 0")->required();
    cmd->add_flag("--json", c.json, "machine-readable output");
    cmd->add_option("--jobs", c.jobs, "worker threads (default: available parallelism)");
    cmd->add_flag("--no-cache", c.no_cache, "ignore and do not write the catalog cache");
    cmd->add_option("--cache-dir", c.cache_dir, "catalog cache directory (overrides TROPICELL_CACHE)");
    cmd->add_option("--max-classes", c.max_classes,
                    "abort enumeration past this many classes, keeping a checkpoint (0: no limit)");
    cmd->add_flag("-q,--quiet", c.quiet, "no progress messages");
}

GraphCatalog select(const GraphCatalog& full, const std::string& subcomplex)
{
    if (subcomplex.empty())
        return full;
    return repeated_marking_subcomplex(full);
}

std::string complex_label(const Common& c, const std::string& subcomplex)
{
    return std::string(subcomplex.empty() ? "Delta" : "Delta^rep") + "(" + std::to_string(c.g) +
           "," + std::to_string(c.n) + ")";
}

BettiTable compute_betti(const Common& c, const GraphCatalog& catalog, bool reduced,
                         const std::string& label, ChainComplex* keep = nullptr)
{
    ComplexOptions co;
    co.reduced = reduced;
    co.jobs = c.jobs;
    ChainComplex complex = build_complex(catalog, co);
    HomologyOptions ho;
    ho.jobs = c.jobs;
    BettiTable table = betti(complex, ho);
    table.label = label;
    if (keep)
        *keep = std::move(complex);
    return table;
}

void export_matrices(const ChainComplex& complex, const fs::path& dir, const std::string& stem)
{
    fs::create_directories(dir);
    for (int p = complex.min_degree() + 1; p <= complex.max_degree(); ++p)
    {
        const fs::path file = dir / (stem + "_d" + std::to_string(p) + ".txt");
        std::ofstream out(file);
        if (!out)
            throw std::runtime_error("cannot write " + file.string());
        write_triplets(out, complex.boundary(p));
    }
}

std::string matrix_stem(const Common& c, const std::string& subcomplex)
{
    return std::string(subcomplex.empty() ? "boundary" : "boundary_rep") + "_g" +
           std::to_string(c.g) + "_n" + std::to_string(c.n);
}

int cmd_enumerate(const Common& c)
{
    const GraphCatalog catalog = c.catalog();
    const TorsionCensus census = torsion_census(catalog);
    if (c.json)
    {
        nlohmann::json degrees = nlohmann::json::array();
        for (int p = 0; p < catalog.num_degrees(); ++p)
            degrees.push_back({{"degree", p},
                               {"edges", p + 1},
                               {"classes", catalog.size(p)},
                               {"alpha", census.alpha[p]},
                               {"beta", census.beta[p]}});
        nlohmann::json out = {{"g", c.g},
                              {"n", c.n},
                              {"total", catalog.total_size()},
                              {"empty", catalog.empty()},
                              {"degrees", degrees}};
        std::cout << out.dump(2) << '\n';
        return kOk;
    }
    std::cout << "stable graphs of genus " << c.g << " with " << c.n << " markings\n";
    if (catalog.empty())
    {
        std::cout << "empty catalog: Delta(" << c.g << "," << c.n << ") has no cells\n";
        return kOk;
    }
    std::cout << "degree  edges  classes  alpha  beta\n";
    for (int p = 0; p < catalog.num_degrees(); ++p)
        std::cout << std::setw(6) << p << std::setw(7) << p + 1 << std::setw(9) << catalog.size(p)
                  << std::setw(7) << census.alpha[p] << std::setw(6) << census.beta[p] << '\n';
    std::cout << "total classes: " << catalog.total_size() << '\n';
    return kOk;
}

int cmd_homology(const Common& c, const std::string& subcomplex, bool unreduced,
                 const std::string& export_dir)
{
    const GraphCatalog catalog = select(c.catalog(), subcomplex);
    ChainComplex complex;
    const BettiTable table =
        compute_betti(c, catalog, !unreduced, complex_label(c, subcomplex), &complex);
    if (!export_dir.empty())
        export_matrices(complex, export_dir, matrix_stem(c, subcomplex));
    if (c.json)
        std::cout << table.to_json().dump(2) << '\n';
    else
        std::cout << table.to_text();
    return kOk;
}

int cmd_character(const Common& c)
{
    if (c.n < 3)
        throw UsageError("character needs n >= 3");
    EnumerationOptions eo = c.enumeration();
    const ClassFunction top = top_homology_character(c.n, c.cache(), eo);
    const ClassFunction dihedral = dihedral_character(c.n);
    const bool equal = top == dihedral;
    if (c.json)
    {
        nlohmann::json verdicts = nlohmann::json::object();
        for (const auto& cls : top.classes())
            verdicts[partition_string(cls)] = top(cls) == dihedral(cls);
        std::cout << nlohmann::json{{"n", c.n},
                                    {"top_homology", top.to_json()["values"]},
                                    {"dihedral", dihedral.to_json()["values"]},
                                    {"agree", verdicts},
                                    {"verdict", equal ? "EQUAL" : "DIFFERENT"}}
                         .dump(2)
                  << '\n';
    }
    else
    {
        std::cout << character_table_text({{"homology", top}, {"dihedral", dihedral}});
        std::cout << "agree   ";
        for (const auto& cls : top.classes())
            std::cout << "  " << partition_string(cls) << ":" << (top(cls) == dihedral(cls) ? "yes" : "NO");
        std::cout << '\n' << "verdict: " << (equal ? "EQUAL" : "DIFFERENT") << '\n';
    }
    return equal ? kOk : kVerificationFailure;
}

int cmd_verify(const Common& c, const std::string& suite, bool inject)
{
    VerifyOptions vo;
    vo.suite = suite == "full" ? Suite::Full : Suite::Quick;
    vo.jobs = c.jobs;
    vo.cache = c.cache();
    vo.inject_sign_flip = inject;
    vo.progress = c.progress();
    const VerificationReport report = run_verification(vo);
    if (c.json)
        std::cout << report.to_json().dump(2) << '\n';
    else
        std::cout << report.to_text();
    return report.passed() ? kOk : kVerificationFailure;
}

int cmd_export(const Common& c, const std::string& format, const std::string& output,
               const std::string& subcomplex)
{
    std::ofstream file;
    auto sink = [&]() -> std::ostream& {
        if (output.empty() || output == "-")
            return std::cout;
        file.open(output);
        if (!file)
            throw std::runtime_error("cannot write " + output);
        return file;
    };

    if (format == "character")
    {
        if (c.n < 3)
            throw UsageError("character export needs n >= 3");
        const ClassFunction top = top_homology_character(c.n, c.cache(), c.enumeration());
        sink() << top.to_json().dump(2) << '\n';
        return kOk;
    }
    if (c.g < 0)
        throw UsageError("-g is required for this export format");
    const GraphCatalog catalog = select(c.catalog(), subcomplex);
    if (format == "catalog")
    {
        write_catalog(sink(), catalog);
        return kOk;
    }
    ChainComplex complex;
    const BettiTable table = compute_betti(c, catalog, true, complex_label(c, subcomplex), &complex);
    if (format == "betti")
    {
        sink() << table.to_json().dump(2) << '\n';
        return kOk;
    }
    // matrices
    if (output.empty() || output == "-")
        throw UsageError("matrices export needs --output DIR");
    export_matrices(complex, output, matrix_stem(c, subcomplex));
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rational homology of tropical moduli spaces Delta_{g,n}"};
    app.require_subcommand(1);

    Common common;

    auto* enumerate = app.add_subcommand("enumerate", "enumerate stable graphs and cache the catalog");
    add_common(enumerate, common, true);

    std::string subcomplex, export_dir;
    bool unreduced = false;
    auto* homology = app.add_subcommand("homology", "reduced rational Betti numbers of Delta_{g,n}");
    add_common(homology, common, true);
    homology->add_option("--subcomplex", subcomplex, "restrict to a subcomplex")
        ->check(CLI::IsMember({"rep"}));
    homology->add_flag("--unreduced", unreduced, "unreduced homology");
    homology->add_option("--export-matrices", export_dir, "write boundary matrices as triplets to DIR");

    auto* character = app.add_subcommand("character", "compare the top homology character with the dihedral formula");
    add_common(character, common, false);

    std::string suite = "quick";
    bool inject = false;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--suite", suite, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_flag("--json", common.json, "machine-readable report");
    verify->add_option("--jobs", common.jobs, "worker threads");
    verify->add_flag("--no-cache", common.no_cache, "ignore the catalog cache");
    verify->add_option("--cache-dir", common.cache_dir, "catalog cache directory");
    verify->add_flag("-q,--quiet", common.quiet, "no progress messages");
    verify->add_flag("--inject-fault", inject, "flip one boundary sign")->group("");

    std::string format, output;
    auto* exporter = app.add_subcommand("export", "export catalogs, matrices, Betti tables or characters");
    exporter->add_option("--format", format, "catalog | matrices | betti | character")
        ->required()
        ->check(CLI::IsMember({"catalog", "matrices", "betti", "character"}));
    exporter->add_option("-o,--output", output, "output file (directory for matrices); default stdout");
    exporter->add_option("--subcomplex", subcomplex, "restrict to a subcomplex")
        ->check(CLI::IsMember({"rep"}));
    exporter->add_option("-g,--genus", common.g, "genus g >= 0");
    exporter->add_option("-n,--markings", common.n, "number of markings")->required();
    exporter->add_option("--jobs", common.jobs, "worker threads");
    exporter->add_flag("--no-cache", common.no_cache, "ignore the catalog cache");
    exporter->add_option("--cache-dir", common.cache_dir, "catalog cache directory");
    exporter->add_option("--max-classes", common.max_classes, "enumeration class limit");
    exporter->add_flag("-q,--quiet", common.quiet, "no progress messages");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kUsage;
    }

    try
    {
        if (*enumerate || *homology)
            check_parameters(common.g, common.n);
        if (*enumerate)
            return cmd_enumerate(common);
        if (*homology)
            return cmd_homology(common, subcomplex, unreduced, export_dir);
        if (*character)
            return cmd_character(common);
        if (*verify)
            return cmd_verify(common, suite, inject);
        if (*exporter)
        {
            if (format != "character")
                check_parameters(common.g, common.n);
            return cmd_export(common, format, output, subcomplex);
        }
    }
    catch (const UsageError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    catch (const ResourceLimitExceeded& e)
    {
        std::cerr << "resource limit: " << e.what() << " (checkpoint saved; rerun to resume)\n";
        return kResource;
    }
    catch (const IntegrityError& e)
    {
        std::cerr << "integrity error: " << e.what() << '\n';
        return kResource;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kResource;
    }
    return kUsage;
}
