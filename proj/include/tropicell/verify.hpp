/**
 * Verification bundles: every structural claim about Delta_{g,n} that can
 * be checked at desk scale, run as a list of named checks.
 */
#ifndef TROPICELL_VERIFY_HPP
#define TROPICELL_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropicell/catalog_io.hpp"

namespace tropicell {

struct Check
{
    std::string name;
    /// The statement being checked.
    std::string claim;
    std::string expected;
    /// Where the expected value comes from: "closed form", "identity", "oracle", ...
    std::string source;
    std::string computed;
    bool passed = false;
    double seconds = 0.0;
};

struct VerificationReport
{
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

enum class Suite
{
    Quick,
    Full
};

struct VerifyOptions
{
    Suite suite = Suite::Quick;
    unsigned jobs = 0;
    CacheOptions cache;
    /// Flip the sign of one boundary entry before the boundary-squared check.
    bool inject_sign_flip = false;
    std::function<void(const std::string&)> progress;
};

VerificationReport run_verification(const VerifyOptions& options);

} // namespace tropicell

#endif
