/**
 * \file secjam/experiments.hpp
 *
 * \brief Sweep harness producing intercept-probability tables (analytic
 *  and, optionally, Monte Carlo) for SNR, pair-count and MER sweeps.
 *
 * CSV layout: a `# secrecy-sim v1` version line, a `# experiment=...` line,
 * the column header, then one row per grid point and scheme. SNR and MER
 * are written in dB; computation is linear. Output is byte-identical for
 * identical inputs and seed.
 */

#ifndef SECJAM_EXPERIMENTS_HPP
#define SECJAM_EXPERIMENTS_HPP

#include <secjam/analytic.hpp>
#include <secjam/model.hpp>
#include <secjam/rng.hpp>
#include <secjam/simulate.hpp>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace secjam {

enum class Experiment
{
	fig2,
	fig3,
	fig4,
	fig5,
	fig6,
	sweep,
	validate,
};

[[nodiscard]] inline std::string_view experiment_name(Experiment e)
{
	switch (e)
	{
		case Experiment::fig2: return "fig2";
		case Experiment::fig3: return "fig3";
		case Experiment::fig4: return "fig4";
		case Experiment::fig5: return "fig5";
		case Experiment::fig6: return "fig6";
		case Experiment::sweep: return "sweep";
		case Experiment::validate: return "validate";
	}
	return "?";
}

[[nodiscard]] inline Experiment parse_experiment(std::string_view name)
{
	for (auto e : {Experiment::fig2, Experiment::fig3, Experiment::fig4, Experiment::fig5, Experiment::fig6, Experiment::sweep, Experiment::validate})
	{
		if (experiment_name(e) == name)
		{
			return e;
		}
	}
	throw std::invalid_argument("unknown experiment '" + std::string(name) + "'");
}

/// Inclusive dB grid lo, lo + step, ..., hi.
struct DbGrid
{
	double lo = 0.0;
	double hi = 0.0;
	double step = 1.0;

	[[nodiscard]] std::vector<double> values() const
	{
		if (!(hi >= lo) || !(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi))
		{
			throw std::invalid_argument("dB grid needs lo <= hi and step > 0");
		}
		std::vector<double> out;
		// Index-based so the points do not drift with accumulated rounding.
		auto const count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
		for (std::size_t k = 0; k < count; ++k)
		{
			out.push_back(lo + static_cast<double>(k) * step);
		}
		return out;
	}
};

/// Parses "lo:hi:step" or a single value "x" (meaning x:x:1).
[[nodiscard]] inline DbGrid parse_db_grid(std::string const& text)
{
	auto parse = [&](std::string const& s) {
		std::size_t used = 0;
		double v = 0.0;
		try
		{
			v = std::stod(s, &used);
		}
		catch (std::exception const&)
		{
			used = 0;
		}
		if (used == 0 || used != s.size())
		{
			throw std::invalid_argument("bad dB grid '" + text + "' (expected lo:hi:step)");
		}
		return v;
	};
	auto const first = text.find(':');
	if (first == std::string::npos)
	{
		double const v = parse(text);
		return {v, v, 1.0};
	}
	auto const second = text.find(':', first + 1);
	if (second == std::string::npos)
	{
		throw std::invalid_argument("bad dB grid '" + text + "' (expected lo:hi:step)");
	}
	DbGrid grid{parse(text.substr(0, first)), parse(text.substr(first + 1, second - first - 1)), parse(text.substr(second + 1))};
	(void)grid.values();
	return grid;
}

struct ExperimentSpec
{
	Experiment experiment = Experiment::fig2;
	std::optional<SystemConfig> config;  ///< explicit config (file or symmetric shorthand)
	std::optional<std::size_t> symmetric_pairs;
	std::optional<double> symmetric_mer;
	std::optional<DbGrid> gamma_db;
	std::optional<DbGrid> mer_db;
	std::vector<Scheme> schemes{Scheme::noncoop, Scheme::random_jammer, Scheme::optimal_jammer};
	std::uint64_t trials = 100'000;  ///< 0 disables Monte Carlo columns
	RngSpec rng{};
	unsigned workers = 0;
};

inline constexpr std::uint64_t min_mc_trials = 1000;
inline constexpr std::size_t default_pairs = 4;
inline constexpr double default_fixed_gamma_db = 10.0;
inline constexpr std::size_t pair_sweep_max = 8;

struct FigureRow
{
	std::optional<double> mer_db;
	std::optional<std::size_t> pairs;
	double gamma_db = 0.0;
	Scheme scheme = Scheme::noncoop;
	InterceptProbability analytic{};
	std::optional<InterceptEstimate> mc;
};

struct FigureTable
{
	Experiment experiment = Experiment::fig2;
	bool has_mer = false;
	bool has_pairs = false;
	bool has_mc = false;
	std::uint64_t trials = 0;
	std::uint64_t seed = 0;
	std::vector<FigureRow> rows;
};

namespace detail {

inline void require_spec(ExperimentSpec const& spec)
{
	if (spec.schemes.empty())
	{
		throw std::invalid_argument("no schemes selected");
	}
	if (spec.trials != 0 && spec.trials < min_mc_trials)
	{
		throw std::invalid_argument("Monte Carlo needs at least 1000 trials (use --trials 0 for analytic only)");
	}
}

inline double spec_mer(ExperimentSpec const& spec) { return spec.symmetric_mer.value_or(1.0); }

inline SystemConfig base_config(ExperimentSpec const& spec)
{
	if (spec.config)
	{
		require_valid(*spec.config);
		return *spec.config;
	}
	return make_symmetric_config(spec.symmetric_pairs.value_or(default_pairs), spec_mer(spec));
}

inline std::vector<double> fixed_gamma_db(ExperimentSpec const& spec)
{
	return spec.gamma_db.value_or(DbGrid{default_fixed_gamma_db, default_fixed_gamma_db, 1.0}).values();
}

inline FigureRow evaluate_row(ExperimentSpec const& spec, SystemConfig const& config, Scheme scheme, double gamma_db)
{
	FigureRow row;
	row.gamma_db = gamma_db;
	row.scheme = scheme;
	double const gamma = from_db(gamma_db);
	row.analytic = intercept_probability(scheme, config, gamma);
	if (spec.trials > 0)
	{
		row.mc = estimate_intercept(config, scheme, gamma, spec.trials, spec.rng, spec.workers);
	}
	return row;
}

inline FigureTable make_table(ExperimentSpec const& spec, Experiment experiment, bool has_mer, bool has_pairs)
{
	require_spec(spec);
	FigureTable table;
	table.experiment = experiment;
	table.has_mer = has_mer;
	table.has_pairs = has_pairs;
	table.has_mc = spec.trials > 0;
	table.trials = spec.trials;
	table.seed = spec.rng.seed;
	return table;
}

inline FigureTable snr_sweep(ExperimentSpec const& spec, Experiment experiment)
{
	auto table = make_table(spec, experiment, false, false);
	SystemConfig const config = base_config(spec);
	for (double gdb : spec.gamma_db.value_or(DbGrid{0.0, 40.0, 2.0}).values())
	{
		for (Scheme s : spec.schemes)
		{
			table.rows.push_back(evaluate_row(spec, config, s, gdb));
		}
	}
	return table;
}

inline FigureTable pair_sweep(ExperimentSpec const& spec, Experiment experiment, std::vector<double> const& mers_db)
{
	auto table = make_table(spec, experiment, !mers_db.empty(), true);
	std::vector<std::optional<double>> mer_axis;
	if (mers_db.empty())
	{
		mer_axis.emplace_back(std::nullopt);
	}
	for (double m : mers_db)
	{
		mer_axis.emplace_back(m);
	}
	for (auto const& mer_db : mer_axis)
	{
		double const mer = mer_db ? from_db(*mer_db) : spec_mer(spec);
		for (std::size_t n = 1; n <= pair_sweep_max; ++n)
		{
			SystemConfig const config = make_symmetric_config(n, mer);
			for (double gdb : fixed_gamma_db(spec))
			{
				for (Scheme s : spec.schemes)
				{
					auto row = evaluate_row(spec, config, s, gdb);
					row.mer_db = mer_db;
					row.pairs = n;
					table.rows.push_back(row);
				}
			}
		}
	}
	return table;
}

} // namespace detail

/// Intercept probability versus SNR (default symmetric N = 4, MER = 1, 0..40 dB).
[[nodiscard]] inline FigureTable run_fig2(ExperimentSpec const& spec)
{
	return detail::snr_sweep(spec, Experiment::fig2);
}

/// Versus the number of pairs N = 1..8 at fixed SNR (default 10 dB).
[[nodiscard]] inline FigureTable run_fig3(ExperimentSpec const& spec)
{
	return detail::pair_sweep(spec, Experiment::fig3, {});
}

/// Versus MER (default -10..30 dB in 2 dB steps) at fixed SNR, N pairs.
[[nodiscard]] inline FigureTable run_fig4(ExperimentSpec const& spec)
{
	auto table = detail::make_table(spec, Experiment::fig4, true, false);
	std::size_t const n = spec.symmetric_pairs.value_or(default_pairs);
	for (double mdb : spec.mer_db.value_or(DbGrid{-10.0, 30.0, 2.0}).values())
	{
		SystemConfig const config = make_symmetric_config(n, from_db(mdb));
		for (double gdb : detail::fixed_gamma_db(spec))
		{
			for (Scheme s : spec.schemes)
			{
				auto row = detail::evaluate_row(spec, config, s, gdb);
				row.mer_db = mdb;
				table.rows.push_back(row);
			}
		}
	}
	return table;
}

inline DbGrid const fig56_default_mers{-5.0, 5.0, 10.0};

/// Versus SNR for MER in {-5, +5} dB.
[[nodiscard]] inline FigureTable run_fig5(ExperimentSpec const& spec)
{
	auto table = detail::make_table(spec, Experiment::fig5, true, false);
	std::size_t const n = spec.symmetric_pairs.value_or(default_pairs);
	for (double mdb : spec.mer_db.value_or(fig56_default_mers).values())
	{
		SystemConfig const config = make_symmetric_config(n, from_db(mdb));
		for (double gdb : spec.gamma_db.value_or(DbGrid{0.0, 40.0, 2.0}).values())
		{
			for (Scheme s : spec.schemes)
			{
				auto row = detail::evaluate_row(spec, config, s, gdb);
				row.mer_db = mdb;
				table.rows.push_back(row);
			}
		}
	}
	return table;
}

/// Versus N = 1..8 for MER in {-5, +5} dB at fixed SNR.
[[nodiscard]] inline FigureTable run_fig6(ExperimentSpec const& spec)
{
	return detail::pair_sweep(spec, Experiment::fig6, spec.mer_db.value_or(fig56_default_mers).values());
}

/// SNR sweep over an arbitrary config.
[[nodiscard]] inline FigureTable run_sweep(ExperimentSpec const& spec)
{
	return detail::snr_sweep(spec, Experiment::sweep);
}

[[nodiscard]] inline FigureTable run_figure(ExperimentSpec const& spec)
{
	switch (spec.experiment)
	{
		case Experiment::fig2: return run_fig2(spec);
		case Experiment::fig3: return run_fig3(spec);
		case Experiment::fig4: return run_fig4(spec);
		case Experiment::fig5: return run_fig5(spec);
		case Experiment::fig6: return run_fig6(spec);
		case Experiment::sweep: return run_sweep(spec);
		case Experiment::validate: break;
	}
	throw std::invalid_argument("validate does not produce a figure table");
}

namespace detail {

inline std::string format_number(char const* fmt, double v)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, fmt, v);
	return buf;
}

inline std::string format_prob(double v) { return format_number("%.17g", v); }

// Rounded to 1e-6 dB so that index-based grids print cleanly; avoids "-0".
inline std::string format_db(double v)
{
	double const rounded = std::round(v * 1e6) / 1e6;
	return format_number("%.6g", rounded == 0.0 ? 0.0 : rounded);
}

} // namespace detail

inline void write_csv(FigureTable const& table, std::ostream& out)
{
	out << "# secrecy-sim v1\n";
	out << "# experiment=" << experiment_name(table.experiment) << " trials=" << table.trials << " seed=" << table.seed << '\n';

	std::string header;
	if (table.has_mer) header += "mer_db,";
	if (table.has_pairs) header += "n,";
	header += "gamma_db,scheme,p_analytic";
	if (table.has_pairs) header += ",degraded";
	if (table.has_mc) header += ",p_mc,mc_stderr";
	out << header << '\n';

	for (auto const& row : table.rows)
	{
		std::string line;
		if (table.has_mer) line += detail::format_db(row.mer_db.value_or(0.0)) + ',';
		if (table.has_pairs) line += std::to_string(row.pairs.value_or(0)) + ',';
		line += detail::format_db(row.gamma_db);
		line += ',';
		line += scheme_name(row.scheme);
		line += ',';
		line += detail::format_prob(row.analytic.value);
		if (table.has_pairs) line += row.analytic.degraded ? ",1" : ",0";
		if (table.has_mc && row.mc)
		{
			line += ',' + detail::format_prob(row.mc->p_hat) + ',' + detail::format_prob(row.mc->std_err);
		}
		out << line << '\n';
	}
}

} // namespace secjam

#endif // SECJAM_EXPERIMENTS_HPP
