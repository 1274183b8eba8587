/**
 * \file secjam/model.hpp
 *
 * \brief System configuration of a spectrum-sharing network with N
 *  source-destination pairs and one common eavesdropper.
 *
 * All channel gains are stored as means of the squared fading magnitude
 * (exponential means), never as Rayleigh scale parameters.
 */

#ifndef SECJAM_MODEL_HPP
#define SECJAM_MODEL_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace secjam {

/// Per-pair average gains and duty cycle.
struct PairParams
{
	double sigma2_sd = 1.0;  ///< mean of |h_{s_i d_i}|^2 (main channel)
	double sigma2_se = 1.0;  ///< mean of |h_{s_i e}|^2, also used when S_i jams for another pair
	double alpha = 1.0;      ///< duty cycle

	friend bool operator==(PairParams const&, PairParams const&) = default;
};

struct SystemConfig
{
	std::vector<PairParams> pairs;

	[[nodiscard]] std::size_t size() const noexcept { return pairs.size(); }
	[[nodiscard]] PairParams const& operator[](std::size_t i) const { return pairs.at(i); }

	friend bool operator==(SystemConfig const&, SystemConfig const&) = default;
};

/// Slack for the duty-cycle sum, so that N copies of 1/N still pass.
inline constexpr double duty_cycle_slack = 1e-12;

/**
 * Returns a description of the first violated invariant, or nothing.
 */
[[nodiscard]] inline std::optional<std::string> validate(SystemConfig const& config)
{
	if (config.pairs.empty())
	{
		return "no source-destination pairs";
	}

	double alpha_sum = 0.0;
	for (std::size_t i = 0; i < config.pairs.size(); ++i)
	{
		auto const& p = config.pairs[i];
		if (!(p.sigma2_sd > 0.0) || !(p.sigma2_se > 0.0) || !std::isfinite(p.sigma2_sd) || !std::isfinite(p.sigma2_se))
		{
			std::ostringstream oss;
			oss << "nonpositive gain at pair " << i;
			return oss.str();
		}
		if (!(p.alpha >= 0.0 && p.alpha <= 1.0))
		{
			std::ostringstream oss;
			oss << "duty cycle " << p.alpha << " of pair " << i << " outside [0, 1]";
			return oss.str();
		}
		alpha_sum += p.alpha;
	}
	if (alpha_sum > 1.0 + duty_cycle_slack)
	{
		std::ostringstream oss;
		oss << "duty cycles sum " << alpha_sum << " > 1";
		return oss.str();
	}
	return std::nullopt;
}

inline void require_valid(SystemConfig const& config)
{
	if (auto violation = validate(config))
	{
		throw std::invalid_argument("invalid system config: " + *violation);
	}
}

/**
 * N identical pairs with alpha = 1/N, sigma2_se = 1 and sigma2_sd = mer
 * (main-to-eavesdropping ratio of average gains).
 */
[[nodiscard]] inline SystemConfig make_symmetric_config(std::size_t n, double mer)
{
	if (n == 0)
	{
		throw std::invalid_argument("symmetric config needs at least one pair");
	}
	if (!(mer > 0.0) || !std::isfinite(mer))
	{
		throw std::invalid_argument("MER must be positive and finite");
	}
	PairParams const pair{mer, 1.0, 1.0 / static_cast<double>(n)};
	return SystemConfig{std::vector<PairParams>(n, pair)};
}

/// Strictly increasing grid of linear transmit SNR values P_s/N_0.
class SnrSweep
{
public:
	SnrSweep() = default;

	explicit SnrSweep(std::vector<double> gamma_values)
	: values_(std::move(gamma_values))
	{
		for (std::size_t k = 0; k < values_.size(); ++k)
		{
			if (!(values_[k] > 0.0) || !std::isfinite(values_[k]))
			{
				throw std::invalid_argument("SNR values must be positive and finite");
			}
			if (k > 0 && !(values_[k] > values_[k - 1]))
			{
				throw std::invalid_argument("SNR values must be strictly increasing");
			}
		}
	}

	/// `points` log-spaced values from lo to hi inclusive.
	static SnrSweep logspace(double lo, double hi, std::size_t points)
	{
		if (points < 2 || !(lo > 0.0) || !(hi > lo))
		{
			throw std::invalid_argument("logspace needs 0 < lo < hi and at least two points");
		}
		std::vector<double> v(points);
		double const a = std::log10(lo);
		double const b = std::log10(hi);
		for (std::size_t k = 0; k < points; ++k)
		{
			double const t = static_cast<double>(k) / static_cast<double>(points - 1);
			v[k] = std::pow(10.0, a + (b - a) * t);
		}
		v.front() = lo;
		v.back() = hi;
		return SnrSweep(std::move(v));
	}

	[[nodiscard]] std::vector<double> const& values() const noexcept { return values_; }
	[[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
	[[nodiscard]] bool empty() const noexcept { return values_.empty(); }
	[[nodiscard]] double front() const { return values_.front(); }
	[[nodiscard]] double back() const { return values_.back(); }
	[[nodiscard]] auto begin() const noexcept { return values_.begin(); }
	[[nodiscard]] auto end() const noexcept { return values_.end(); }

private:
	std::vector<double> values_;
};

[[nodiscard]] inline double from_db(double db) { return std::pow(10.0, db / 10.0); }
[[nodiscard]] inline double to_db(double linear) { return 10.0 * std::log10(linear); }

} // namespace secjam

#endif // SECJAM_MODEL_HPP
