/**
 * \file secjam/diversity.hpp
 *
 * \brief Empirical secrecy diversity: the negated slope of ln P_int against
 *  ln gamma over a finite high-SNR window.
 *
 * Estimates are always reported with their window. For the cooperative
 * schemes the intercept probability can carry a ln(gamma)/gamma envelope,
 * so finite-window estimates sit below the asymptotic order by roughly
 * 1/ln(gamma).
 */

#ifndef SECJAM_DIVERSITY_HPP
#define SECJAM_DIVERSITY_HPP

#include <secjam/analytic.hpp>
#include <secjam/model.hpp>
#include <secjam/simulate.hpp>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <variant>
#include <vector>

namespace secjam {

struct CurvePoint
{
	double gamma;
	double probability;
};

struct DiversityFit
{
	double slope = 0.0;      ///< least-squares d ln P / d ln gamma
	double diversity = 0.0;  ///< -slope
	double gamma_lo = 0.0;
	double gamma_hi = 0.0;
	std::size_t points = 0;
	double max_residual = 0.0;  ///< worst |ln P - fitted ln P|
};

struct AnalyticSource
{
};

struct SimulatedSource
{
	std::uint64_t trials = 1'000'000;
	RngSpec rng{};
	unsigned workers = 0;
};

using CurveSource = std::variant<AnalyticSource, SimulatedSource>;

namespace detail {

inline void require_log_curve(std::span<CurvePoint const> curve)
{
	for (std::size_t k = 0; k < curve.size(); ++k)
	{
		if (!(curve[k].probability > 0.0) || !std::isfinite(curve[k].probability))
		{
			throw std::domain_error("log-log slope needs positive, finite probabilities");
		}
		if (!(curve[k].gamma > 0.0) || (k > 0 && !(curve[k].gamma > curve[k - 1].gamma)))
		{
			throw std::invalid_argument("SNR values must be positive and strictly increasing");
		}
	}
}

} // namespace detail

/// Two-point slopes (ln P_{k+1} - ln P_k) / (ln gamma_{k+1} - ln gamma_k).
[[nodiscard]] inline std::vector<double> local_slopes(std::span<CurvePoint const> curve)
{
	detail::require_log_curve(curve);
	std::vector<double> slopes;
	for (std::size_t k = 0; k + 1 < curve.size(); ++k)
	{
		slopes.push_back((std::log(curve[k + 1].probability) - std::log(curve[k].probability))
			/ (std::log(curve[k + 1].gamma) - std::log(curve[k].gamma)));
	}
	return slopes;
}

/// Least-squares line through (ln gamma, ln P).
[[nodiscard]] inline DiversityFit fit_log_log(std::span<CurvePoint const> curve)
{
	detail::require_log_curve(curve);
	if (curve.size() < 2)
	{
		throw std::invalid_argument("a diversity fit needs at least two points");
	}
	double const count = static_cast<double>(curve.size());
	double mean_x = 0.0;
	double mean_y = 0.0;
	for (auto const& p : curve)
	{
		mean_x += std::log(p.gamma);
		mean_y += std::log(p.probability);
	}
	mean_x /= count;
	mean_y /= count;

	double sxy = 0.0;
	double sxx = 0.0;
	for (auto const& p : curve)
	{
		double const dx = std::log(p.gamma) - mean_x;
		sxy += dx * (std::log(p.probability) - mean_y);
		sxx += dx * dx;
	}
	double const slope = sxy / sxx;

	DiversityFit fit;
	fit.slope = slope;
	fit.diversity = -slope;
	fit.gamma_lo = curve.front().gamma;
	fit.gamma_hi = curve.back().gamma;
	fit.points = curve.size();
	for (auto const& p : curve)
	{
		double const predicted = mean_y + slope * (std::log(p.gamma) - mean_x);
		fit.max_residual = std::max(fit.max_residual, std::abs(std::log(p.probability) - predicted));
	}
	return fit;
}

[[nodiscard]] inline std::vector<CurvePoint> intercept_curve(Scheme scheme, SystemConfig const& config, SnrSweep const& window, CurveSource const& source)
{
	std::vector<CurvePoint> curve;
	curve.reserve(window.size());
	for (double gamma : window)
	{
		double const p = std::visit(
			[&](auto const& src) -> double {
				using T = std::decay_t<decltype(src)>;
				if constexpr (std::is_same_v<T, AnalyticSource>)
				{
					return intercept_probability(scheme, config, gamma).value;
				}
				else
				{
					return estimate_intercept(config, scheme, gamma, src.trials, src.rng, src.workers).p_hat;
				}
			},
			source);
		curve.push_back({gamma, p});
	}
	return curve;
}

/// Default window: 9 log-spaced points on [1e5, 1e6].
[[nodiscard]] inline SnrSweep default_diversity_window()
{
	return SnrSweep::logspace(1e5, 1e6, 9);
}

[[nodiscard]] inline DiversityFit fit_diversity(Scheme scheme, SystemConfig const& config, SnrSweep const& window, CurveSource const& source = AnalyticSource{})
{
	if (window.size() < 2)
	{
		throw std::invalid_argument("a diversity window needs at least two SNR points");
	}
	auto const curve = intercept_curve(scheme, config, window, source);
	return fit_log_log(curve);
}

} // namespace secjam

#endif // SECJAM_DIVERSITY_HPP
