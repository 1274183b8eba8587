// Command-line front end: figure sweeps as CSV and the validation suite.

#include <secjam/secjam.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

// Parses the two tokens of `--symmetric N=4 MER=1` (either order).
void apply_symmetric(std::vector<std::string> const& tokens, secjam::ExperimentSpec& spec)
{
	for (auto const& token : tokens)
	{
		auto const eq = token.find('=');
		if (eq == std::string::npos)
		{
			throw std::invalid_argument("--symmetric expects N=<count> MER=<ratio>, got '" + token + "'");
		}
		std::string const key = token.substr(0, eq);
		std::string const value = token.substr(eq + 1);
		std::size_t used = 0;
		if (key == "N")
		{
			unsigned long const n = std::stoul(value, &used);
			if (used != value.size() || n == 0)
			{
				throw std::invalid_argument("N must be a positive integer");
			}
			spec.symmetric_pairs = n;
		}
		else if (key == "MER")
		{
			double const mer = std::stod(value, &used);
			if (used != value.size() || !(mer > 0.0))
			{
				throw std::invalid_argument("MER must be a positive number");
			}
			spec.symmetric_mer = mer;
		}
		else
		{
			throw std::invalid_argument("--symmetric keys are N and MER, got '" + key + "'");
		}
	}
}

std::vector<secjam::Scheme> parse_schemes(std::string const& list)
{
	std::vector<secjam::Scheme> out;
	std::stringstream ss(list);
	std::string item;
	while (std::getline(ss, item, ','))
	{
		if (!item.empty())
		{
			out.push_back(secjam::parse_scheme(item));
		}
	}
	if (out.empty())
	{
		throw std::invalid_argument("--schemes needs at least one of nonc, rjs, ojs");
	}
	return out;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Intercept probability of spectrum sharing with cooperative jamming"};

	std::string experiment = "fig2";
	std::string config_path;
	std::vector<std::string> symmetric;
	std::uint64_t trials = 100'000;
	std::string seed = "42";
	std::string out_path;
	std::string gamma_db;
	std::string mer_db;
	std::string schemes = "nonc,rjs,ojs";
	unsigned workers = 0;

	app.add_option("--experiment", experiment, "fig2 | fig3 | fig4 | fig5 | fig6 | sweep | validate")
		->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5", "fig6", "sweep", "validate"}));
	auto* config_opt = app.add_option("--config", config_path, "pair config file (sd_gain se_gain alpha per line)");
	app.add_option("--symmetric", symmetric, "symmetric config, e.g. --symmetric N=4 MER=1")->expected(1, 2)->excludes(config_opt);
	app.add_option("--trials", trials, "Monte Carlo trials per grid point (0 = analytic only)");
	app.add_option("--seed", seed, "64-bit seed, decimal or 0x-hex");
	app.add_option("--out", out_path, "output path (CSV; JSON-lines for validate); stdout if omitted");
	app.add_option("--gamma-db", gamma_db, "SNR grid lo:hi:step in dB (or one value)");
	app.add_option("--mer-db", mer_db, "MER grid lo:hi:step in dB (or one value)");
	app.add_option("--schemes", schemes, "comma-separated subset of nonc,rjs,ojs");
	app.add_option("--workers", workers, "worker threads (0 = all cores); does not change results");

	CLI11_PARSE(app, argc, argv);

	try
	{
		secjam::ExperimentSpec spec;
		spec.experiment = secjam::parse_experiment(experiment);
		if (!config_path.empty())
		{
			spec.config = secjam::load_config(config_path);
		}
		apply_symmetric(symmetric, spec);
		spec.trials = trials;
		spec.rng.seed = secjam::parse_seed(seed);
		spec.workers = workers;
		spec.schemes = parse_schemes(schemes);
		if (!gamma_db.empty())
		{
			spec.gamma_db = secjam::parse_db_grid(gamma_db);
		}
		if (!mer_db.empty())
		{
			spec.mer_db = secjam::parse_db_grid(mer_db);
		}

		std::ofstream file;
		if (!out_path.empty())
		{
			file.open(out_path, std::ios::binary);
			if (!file)
			{
				std::cerr << "error: cannot write '" << out_path << "'\n";
				return 2;
			}
		}
		std::ostream& out = out_path.empty() ? std::cout : file;

		if (spec.experiment == secjam::Experiment::validate)
		{
			auto const report = secjam::run_validate(spec);
			secjam::write_text(report, std::cout);
			if (!out_path.empty())
			{
				secjam::write_jsonl(report, out);
			}
			return report.ok() ? 0 : 1;
		}

		secjam::write_csv(secjam::run_figure(spec), out);
		out.flush();
		if (!out)
		{
			std::cerr << "error: failed writing output\n";
			return 2;
		}
		return 0;
	}
	catch (std::exception const& e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	}
}
