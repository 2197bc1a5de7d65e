#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace wassoc {

enum class CheckStatus { pass, fail, computed };
std::string to_string(CheckStatus s);

/// One verified claim. Ids start with the acceptance criterion, "c06.h1-table".
struct Check {
    std::string id;
    std::string group;      // symgroup, operad, freewa, homology, cohomology, polarization, deform
    std::string claim;
    std::string paper_ref;  // short neutral locator of the claim
    CheckStatus status = CheckStatus::fail;
    nlohmann::json value;     // what was computed
    nlohmann::json expected;  // the stated value, null for computed-only entries
    nlohmann::json detail;    // supporting data, may be null
    int criterion() const;    // the NN of "cNN."
};

struct Report {
    std::vector<Check> checks;  // sorted by id

    bool ok() const;  // no fail
    std::size_t count(CheckStatus s) const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

inline constexpr std::uint32_t kDefaultSeed = 20240611;

struct VerifyOptions {
    std::uint32_t seed = kDefaultSeed;
    std::vector<std::string> only;  // groups; empty means all
};

const std::vector<std::string>& report_groups();
/// Runs every check of the selected groups. Throws std::invalid_argument on
/// an unknown group name.
Report verify_paper(const VerifyOptions& options = {});

}  // namespace wassoc
