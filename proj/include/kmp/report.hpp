#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace kmp {

/// Result of one Frattini-subgroup verification run. Orders are group orders
/// (not logarithms). `thm_ii_*` are reported, never asserted here.
struct VerificationReport
{
	std::string model; // "bch" or "affine_matrix"
	std::string caveat;
	nlohmann::json gcm;
	std::uint32_t q = 0;
	std::int64_t H = 0;                // height cutoff (bch)
	std::optional<std::int64_t> m, k;  // matrix size and truncation (affine)
	std::uint32_t h1_blackbox = 0;
	std::optional<std::uint32_t> h1_linear;
	std::uint32_t h1_predicted = 0;
	bool frattini_eq_derived = false;
	std::uint64_t frattini_order = 0;
	std::uint64_t derived_order = 0;
	std::uint64_t thm_ii_lhs_order = 0; // |Phi|
	std::uint64_t thm_ii_rhs_order = 0; // |<U_gamma : gamma non-simple positive real>|
	bool thm_ii_equal = false;
	bool generators_generate = false;
	double elapsed_ms = 0;

	/// H1 equalities, Phi == [U, U] and generation; the thm_ii_* fields excluded.
	bool asserted_checks_pass() const;
};

nlohmann::json to_json(VerificationReport const &r);
VerificationReport report_from_json(nlohmann::json const &j);

} // namespace kmp
