#include <catch_amalgamated.hpp>

#include <filesystem>

#include "tropicell/verify.hpp"

using namespace tropicell;

namespace {

VerifyOptions quick(const std::string& dir)
{
    VerifyOptions options;
    options.suite = Suite::Quick;
    options.cache.directory = std::filesystem::temp_directory_path() / dir;
    return options;
}

const Check* find(const VerificationReport& report, const std::string& name)
{
    for (const auto& c : report.checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

} // namespace

TEST_CASE("quick suite passes")
{
    const VerificationReport report = run_verification(quick("tropicell_verify_ok"));
    CHECK(report.suite == "quick");
    CHECK(report.checks.size() > 20);
    for (const auto& c : report.checks)
    {
        INFO(c.name << ": expected " << c.expected << ", computed " << c.computed);
        CHECK(c.passed);
        CHECK_FALSE(c.claim.empty());
        CHECK_FALSE(c.source.empty());
    }
    CHECK(report.passed());

    const auto j = report.to_json();
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() == report.checks.size());
    CHECK(report.to_text().find("quick suite: ") != std::string::npos);
}

TEST_CASE("an injected sign flip fails only the boundary check")
{
    VerifyOptions options = quick("tropicell_verify_fault");
    options.inject_sign_flip = true;
    const VerificationReport report = run_verification(options);
    CHECK_FALSE(report.passed());
    const Check* d2 = find(report, "boundary_squares_to_zero");
    REQUIRE(d2);
    CHECK_FALSE(d2->passed);
    for (const auto& c : report.checks)
        if (c.name != "boundary_squares_to_zero")
            CHECK(c.passed);
}
