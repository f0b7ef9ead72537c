#include "kmp/campaign.hpp"
#include "kmp/gcm.hpp"
#include "kmp/root_system.hpp"

#include <fstream>
#include <iostream>

#include <fmt/format.h>

#include "CLI11.hpp"

using nlohmann::json;

namespace {

json load_json(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		throw kmp::Error(kmp::ErrorKind::ConfigError, fmt::format("cannot open {}", path));
	try
	{
		return json::parse(in);
	}
	catch (json::exception const &e)
	{
		throw kmp::Error(kmp::ErrorKind::ConfigError, fmt::format("{}: {}", path, e.what()));
	}
}

int cmd_classify(std::string const &file, bool as_json)
{
	auto const gcm = kmp::gcm_from_json(load_json(file));
	auto const type = kmp::classify(gcm);
	if (as_json)
		std::cout << kmp::to_json(type, gcm).dump(2) << "\n";
	else if (type.indecomposable())
		std::cout << kmp::to_string(type.single()) << "\n";
	else
	{
		for (auto const &b : type.blocks)
		{
			std::vector<std::string> labels;
			for (auto i : b.indices)
				labels.push_back(gcm.label(i));
			std::cout << fmt::format("{{{}}}: {}\n", fmt::join(labels, ","), kmp::to_string(b.type));
		}
	}
	return 0;
}

int cmd_roots(std::string const &file, std::int64_t H, bool as_json)
{
	if (H < 1)
		throw kmp::Error(kmp::ErrorKind::InvalidArgument, "--height must be >= 1");
	auto const gcm = kmp::gcm_from_json(load_json(file));
	auto const roots = kmp::positive_roots_up_to_height(gcm, H);
	if (as_json)
	{
		std::cout << kmp::roots_to_json(roots).dump(2) << "\n";
		return 0;
	}
	for (auto const &r : roots)
		std::cout << fmt::format("{:>3}  ({})  {}\n", kmp::height(r.root), fmt::join(r.root, ", "),
		                         kmp::to_string(r.kind));
	return 0;
}

int cmd_verify(std::string const &file, std::string const &out, std::optional<std::uint64_t> seed,
               std::optional<std::size_t> cap, unsigned threads, bool as_json)
{
	kmp::CampaignOptions options;
	options.seed = seed;
	options.cap = cap;
	options.threads = threads;
	auto const results = kmp::run_campaign(load_json(file), options);
	if (!out.empty())
	{
		std::ofstream o(out);
		o << results.dump(2) << "\n";
	}
	if (as_json)
		std::cout << results["results"].dump(2) << "\n";
	else
		std::cout << kmp::summarize(results);
	return kmp::campaign_exit_code(results);
}

int cmd_verify_report(std::string const &file, unsigned threads)
{
	auto const mismatches = kmp::verify_stored_report(load_json(file), threads);
	for (auto const &m : mismatches)
		std::cout << "mismatch " << m << "\n";
	std::cout << (mismatches.empty() ? "report reproduced\n" : "report differs\n");
	return mismatches.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Kac-Moody root systems and finite Frattini checks"};
	app.require_subcommand(1);

	std::string file, out, report;
	std::int64_t height = 1;
	bool as_json = false;
	std::optional<std::uint64_t> seed;
	std::optional<std::size_t> cap;
	unsigned threads = 0;

	auto *classify = app.add_subcommand("classify", "finite / affine / indefinite type of a GCM");
	classify->add_option("gcm", file, "JSON file: matrix or {\"matrix\", \"labels\"}")->required();
	classify->add_flag("--json", as_json);

	auto *roots = app.add_subcommand("roots", "positive roots up to a height");
	roots->add_option("gcm", file)->required();
	roots->add_option("--height,-H", height)->required();
	roots->add_flag("--json", as_json);

	auto *verify = app.add_subcommand("verify", "run a verification campaign");
	verify->add_option("campaign", file);
	verify->add_option("--out,-o", out, "write the full JSON report here");
	verify->add_option("--seed", seed);
	verify->add_option("--cap", cap, "enumeration cap");
	verify->add_option("--threads,-j", threads);
	verify->add_option("--verify-report", report, "recompute a stored report and compare");
	verify->add_flag("--json", as_json);

	CLI11_PARSE(app, argc, argv);

	try
	{
		if (*classify)
			return cmd_classify(file, as_json);
		if (*roots)
			return cmd_roots(file, height, as_json);
		if (!report.empty())
			return cmd_verify_report(report, threads);
		if (file.empty())
			throw kmp::Error(kmp::ErrorKind::ConfigError, "verify needs a campaign file or --verify-report");
		return cmd_verify(file, out, seed, cap, threads, as_json);
	}
	catch (kmp::Error const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	catch (json::exception const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
}
