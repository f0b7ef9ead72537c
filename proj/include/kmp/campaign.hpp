#pragma once

#include "kmp/pgroup.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace kmp {

inline constexpr std::string_view known_checks[] = {"theorem1", "cor_linear", "generation", "commutator",
                                                    "filtration", "tits", "roots", "lie"};

struct CampaignOptions
{
	std::optional<std::uint64_t> seed; // overrides the campaign's "seed"
	std::optional<std::size_t> cap;    // overrides the campaign's "cap"
	unsigned threads = 0;              // 0: hardware concurrency
};

/// Runs every (instance, check) pair. The output holds the campaign itself,
/// the effective seed and cap, and one entry per pair in canonical order:
/// {"instance", "check", "status": pass|fail|skipped, "asserted", "reason"?, "report"?}.
/// Throws Error(ConfigError) on malformed input.
nlohmann::json run_campaign(nlohmann::json const &campaign, CampaignOptions const &options = {});

/// 0 if every asserted entry passed, 1 otherwise.
int campaign_exit_code(nlohmann::json const &results);

/// Recomputes a stored run and compares every entry except timings.
/// Returns the list of mismatching entry paths (empty on success).
std::vector<std::string> verify_stored_report(nlohmann::json const &stored, unsigned threads = 0);

/// Human-readable one-line-per-entry summary.
std::string summarize(nlohmann::json const &results);

} // namespace kmp
