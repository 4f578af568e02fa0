// Acceptance run: the full verification suite, summarized as one line per criterion.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "tropicell/verify.hpp"

using namespace tropicell;

namespace {

struct Criterion
{
    int number;
    std::string title;
    std::vector<std::string> checks;
    bool blocking = true;
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> list = {
        {1, "Delta(1,n) Betti numbers, n = 3..6",
         {"delta_1_3_betti", "delta_1_4_betti", "delta_1_5_betti", "delta_1_6_betti"}},
        {1, "Delta(1,7) Betti numbers (stretch, non-blocking)", {"delta_1_7_betti"}, false},
        {2, "Delta(1,1) and Delta(1,2) contractible, Delta(1,1) one cell",
         {"delta_1_1_and_1_2_contractible"}},
        {3, "genus zero single Betti number of rank (n-2)!, n = 5,6,7",
         {"delta_0_5_single_rank", "delta_0_6_single_rank", "delta_0_7_single_rank"}},
        {4, "repeated-marking subcomplexes acyclic",
         {"rep_1_2_contractible", "rep_1_3_contractible", "rep_1_4_contractible",
          "rep_1_5_contractible", "rep_2_2_contractible", "rep_2_3_contractible"}},
        {5, "connectivity as homology vanishing",
         {"delta_1_4_connectivity", "delta_1_5_connectivity", "delta_1_6_connectivity",
          "delta_2_2_connectivity", "delta_2_3_connectivity", "connectivity_everywhere"}},
        {6, "support in the top degrees", {"top_degree_support"}},
        {7, "top homology character equals dihedral character, n = 3..6",
         {"character_3", "character_4", "character_5", "character_6"}},
        {8, "property suites",
         {"boundary_squares_to_zero", "face_coherence", "contraction_closure", "key_invariance",
          "sparse_rank_matches_dense", "catalog_matches_bottom_up", "euler_from_traces",
          "character_multiplicities", "euler_from_census", "reference_labeling_invariance"}},
    };
    return list;
}

} // namespace

int main()
{
    VerifyOptions options;
    options.suite = Suite::Full;
    options.progress = [](const std::string& msg) { std::cerr << "[acceptance] " << msg << std::endl; };
    const auto start = std::chrono::steady_clock::now();
    const VerificationReport report = run_verification(options);
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::map<std::string, const Check*> by_name;
    for (const auto& c : report.checks)
        by_name[c.name] = &c;

    bool all_blocking_pass = true;
    for (const auto& crit : criteria())
    {
        bool pass = true;
        double seconds = 0;
        std::vector<const Check*> failed;
        for (const auto& name : crit.checks)
        {
            auto it = by_name.find(name);
            if (it == by_name.end())
            {
                pass = false;
                std::cout << "  missing check: " << name << '\n';
                continue;
            }
            seconds += it->second->seconds;
            if (!it->second->passed)
            {
                pass = false;
                failed.push_back(it->second);
            }
        }
        char line[256];
        std::snprintf(line, sizeof line, "criterion %d: %-4s %s (%.1fs)", crit.number,
                      pass ? "PASS" : "FAIL", crit.title.c_str(), seconds);
        std::cout << line << '\n';
        for (const Check* c : failed)
            std::cout << "    " << c->name << ": expected " << c->expected << ", computed "
                      << c->computed << '\n';
        if (crit.blocking && !pass)
            all_blocking_pass = false;
    }

    std::cout << "\n" << report.to_text();
    std::printf("total wall time %.1fs\n", total);
    std::cout << (all_blocking_pass ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << '\n';
    return all_blocking_pass ? 0 : 1;
}
