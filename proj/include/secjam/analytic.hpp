/**
 * \file secjam/analytic.hpp
 *
 * \brief Closed-form intercept probabilities of the non-cooperative scheme and
 *  of source cooperation with random (RJS) and optimal (OJS) jammer
 *  selection over Rayleigh fading, plus quadrature oracles for the integral
 *  forms the closed forms come from.
 *
 * For active pair i and jammer set J (|J| = 1 for RJS), write
 * Z = |h_{s_i e}|^2 / |h_{s_i d_i}|^2. The intercept event under
 * cooperation is max_{j in J} |h_{s_j e}|^2 gamma + 2 < 2 Z, whose
 * probability is
 *
 *   int_1^inf prod_{j in J} [1 - exp(-(2z - 2)/(sigma2_je gamma))] p_Z(z) dz,
 *   p_Z(z) = sigma2_sd sigma2_se / (sigma2_sd z + sigma2_se)^2.
 *
 * A single factor integrates to
 *
 *   2 sigma2_se r / (sigma2_sd gamma) * exp(phi) E1(phi),
 *   phi = 2 (sigma2_sd + sigma2_se) r / (sigma2_sd gamma),
 *
 * with r = 1/sigma2_je; the product expands into an alternating sum over
 * non-empty subsets where r becomes the subset's reciprocal-gain sum.
 * Source power is split equally between the message and the jamming
 * signal, which is where the factors of 2 come from.
 */

#ifndef SECJAM_ANALYTIC_HPP
#define SECJAM_ANALYTIC_HPP

#include <secjam/model.hpp>
#include <secjam/quadrature.hpp>
#include <secjam/special.hpp>
#include <secjam/subsets.hpp>
#include <secjam/summation.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace secjam {

enum class Scheme
{
	noncoop,
	random_jammer,
	optimal_jammer,
};

[[nodiscard]] inline std::string_view scheme_name(Scheme scheme)
{
	switch (scheme)
	{
		case Scheme::noncoop: return "nonc";
		case Scheme::random_jammer: return "rjs";
		case Scheme::optimal_jammer: return "ojs";
	}
	return "?";
}

[[nodiscard]] inline Scheme parse_scheme(std::string_view name)
{
	if (name == "nonc") return Scheme::noncoop;
	if (name == "rjs") return Scheme::random_jammer;
	if (name == "ojs") return Scheme::optimal_jammer;
	throw std::invalid_argument("unknown scheme '" + std::string(name) + "' (expected nonc, rjs or ojs)");
}

/// Probability plus a flag set when a cooperative scheme had no jammer
/// available (N = 1) and fell back to the non-cooperative value.
struct InterceptProbability
{
	double value = 0.0;
	bool degraded = false;
};

/// Largest N for which the OJS alternating subset sum is evaluated exactly.
inline constexpr std::size_t ojs_max_pairs = 20;

namespace detail {

inline void require_positive_snr(double gamma)
{
	if (!(gamma > 0.0) || !std::isfinite(gamma))
	{
		throw std::invalid_argument("SNR must be positive and finite");
	}
}

inline void require_pair_index(SystemConfig const& config, std::size_t i)
{
	if (i >= config.size())
	{
		throw std::out_of_range("pair index out of range");
	}
}

/// Shared by RJS and OJS so that N = 2 gives bit-identical results.
inline double jamming_exponent(double sd, double se, double recip_sum, double gamma)
{
	return 2.0 * (sd + se) * recip_sum / (sd * gamma);
}

inline double jammed_intercept_term(double sd, double se, double recip_sum, double gamma)
{
	double const coefficient = 2.0 * se * recip_sum / (sd * gamma);
	return coefficient * e1_scaled(jamming_exponent(sd, se, recip_sum, gamma));
}

/// e-folds kept on either side of the breakpoints; the truncated mass is below e^-60.
inline constexpr double log_margin = 60.0;

/**
 * int_1^inf p_Z(z) factor(z - 1) dz with t = z - 1 = e^s. In s the integrand
 * decays exponentially at both ends (factor ~ t^m near 0, p_Z ~ 1/t^2 at
 * infinity), so a finite range with breakpoints at the jamming scale
 * `switch_on` and the density scale sigma2_se/sigma2_sd suffices.
 */
template <typename Factor>
double integrate_against_ratio_density(double sd, double se, double switch_on, Factor const& factor)
{
	auto integrand = [&](double s) {
		double const t = std::exp(s);
		double const denom = sd * (1.0 + t) + se;
		return sd * se / (denom * denom) * factor(t) * t;
	};
	double const a = std::log(switch_on);
	double const b = std::log(se / sd);
	std::vector<double> const knots{std::min(a, b) - log_margin, std::min(a, b), std::max(a, b), std::max(a, b) + log_margin};
	CompensatedSum total;
	for (std::size_t k = 0; k + 1 < knots.size(); ++k)
	{
		if (knots[k + 1] > knots[k])
		{
			total += integrate_adaptive(integrand, knots[k], knots[k + 1]);
		}
	}
	return total.value();
}

} // namespace detail

/// Non-cooperative intercept probability; does not depend on SNR.
[[nodiscard]] inline double intercept_noncoop(SystemConfig const& config)
{
	require_valid(config);
	CompensatedSum total;
	for (auto const& p : config.pairs)
	{
		total += p.alpha * (p.sigma2_se / (p.sigma2_sd + p.sigma2_se));
	}
	return total.value();
}

/// Exponent phi of the RJS term for active pair i jammed by source j.
[[nodiscard]] inline double varphi_rjs(SystemConfig const& config, std::size_t i, std::size_t j, double gamma)
{
	detail::require_pair_index(config, i);
	detail::require_pair_index(config, j);
	detail::require_positive_snr(gamma);
	if (i == j)
	{
		throw std::invalid_argument("a pair cannot jam for itself");
	}
	auto const& active = config.pairs[i];
	return detail::jamming_exponent(active.sigma2_sd, active.sigma2_se, 1.0 / config.pairs[j].sigma2_se, gamma);
}

/// Pr(|h_{s_j e}|^2 gamma + 2 < 2Z) in closed form.
[[nodiscard]] inline double rjs_term(SystemConfig const& config, std::size_t i, std::size_t j, double gamma)
{
	(void)varphi_rjs(config, i, j, gamma);  // argument checks
	auto const& active = config.pairs[i];
	return detail::jammed_intercept_term(active.sigma2_sd, active.sigma2_se, 1.0 / config.pairs[j].sigma2_se, gamma);
}

[[nodiscard]] inline InterceptProbability intercept_sc_rjs(SystemConfig const& config, double gamma)
{
	require_valid(config);
	detail::require_positive_snr(gamma);
	std::size_t const n = config.size();
	if (n == 1)
	{
		return {intercept_noncoop(config), true};
	}

	CompensatedSum total;
	for (std::size_t i = 0; i < n; ++i)
	{
		auto const& active = config.pairs[i];
		CompensatedSum over_jammers;
		for (std::size_t j = 0; j < n; ++j)
		{
			if (j != i)
			{
				over_jammers += detail::jammed_intercept_term(active.sigma2_sd, active.sigma2_se, 1.0 / config.pairs[j].sigma2_se, gamma);
			}
		}
		total += active.alpha * (over_jammers.value() / static_cast<double>(n - 1));
	}
	return {total.value(), false};
}

/// Quadrature of the RJS term's integral form; independent of E1.
[[nodiscard]] inline double rjs_integral_oracle(SystemConfig const& config, std::size_t i, std::size_t j, double gamma)
{
	detail::require_pair_index(config, i);
	detail::require_pair_index(config, j);
	detail::require_positive_snr(gamma);
	if (i == j)
	{
		throw std::invalid_argument("a pair cannot jam for itself");
	}
	auto const& active = config.pairs[i];
	double const jam = config.pairs[j].sigma2_se * gamma;
	return detail::integrate_against_ratio_density(active.sigma2_sd, active.sigma2_se, 0.5 * jam,
		[jam](double t) { return -std::expm1(-2.0 * t / jam); });
}

/// Exponent phi of the OJS subset term; `jammers` are pair indices forming J_k.
[[nodiscard]] inline double phi_ojs(SystemConfig const& config, std::size_t i, std::span<std::size_t const> jammers, double gamma)
{
	detail::require_pair_index(config, i);
	detail::require_positive_snr(gamma);
	if (jammers.empty())
	{
		throw std::invalid_argument("jammer subset must be non-empty");
	}
	double recip_sum = 0.0;
	for (std::size_t j : jammers)
	{
		detail::require_pair_index(config, j);
		if (j == i)
		{
			throw std::invalid_argument("jammer subset must exclude the active pair");
		}
		recip_sum += 1.0 / config.pairs[j].sigma2_se;
	}
	auto const& active = config.pairs[i];
	return detail::jamming_exponent(active.sigma2_sd, active.sigma2_se, recip_sum, gamma);
}

/**
 * Inner bracket of the OJS formula for active pair i:
 *
 *   sum_k (-1)^{|J_k|+1} 2 sigma2_se R_k / (sigma2_sd gamma) exp(phi_k) E1(phi_k),
 *   R_k = sum_{j in J_k} 1/sigma2_je.
 *
 * Terms of equal cardinality share a sign and are summed first; the N - 1
 * partial sums are then combined in order of increasing cardinality.
 */
[[nodiscard]] inline double ojs_bracket(SystemConfig const& config, std::size_t i, double gamma)
{
	detail::require_pair_index(config, i);
	detail::require_positive_snr(gamma);
	std::size_t const n = config.size();
	if (n < 2)
	{
		throw std::invalid_argument("OJS bracket needs at least one candidate jammer");
	}
	if (n > ojs_max_pairs)
	{
		throw std::length_error("exact OJS subset sum is limited to N <= 20; use ojs_integral_oracle for larger N");
	}

	auto const& active = config.pairs[i];
	std::vector<double> recip;
	recip.reserve(n - 1);
	for (std::size_t j = 0; j < n; ++j)
	{
		if (j != i)
		{
			recip.push_back(1.0 / config.pairs[j].sigma2_se);
		}
	}

	SubsetIterator const subsets(recip.size());
	std::vector<double> recip_sum(static_cast<std::size_t>(subsets.count()) + 1, 0.0);
	std::vector<CompensatedSum> by_size(recip.size() + 1);
	for (Subcollection const s : subsets)
	{
		std::uint64_t const rest = s.mask & (s.mask - 1);
		recip_sum[s.mask] = recip_sum[rest] + recip[static_cast<std::size_t>(std::countr_zero(s.mask))];
		by_size[static_cast<std::size_t>(s.size)] += detail::jammed_intercept_term(active.sigma2_sd, active.sigma2_se, recip_sum[s.mask], gamma);
	}

	CompensatedSum bracket;
	for (std::size_t m = 1; m < by_size.size(); ++m)
	{
		if (m % 2 == 1)
		{
			bracket += by_size[m].value();
		}
		else
		{
			bracket -= by_size[m].value();
		}
	}
	return bracket.value();
}

[[nodiscard]] inline InterceptProbability intercept_sc_ojs(SystemConfig const& config, double gamma)
{
	require_valid(config);
	detail::require_positive_snr(gamma);
	std::size_t const n = config.size();
	if (n == 1)
	{
		return {intercept_noncoop(config), true};
	}
	if (n > ojs_max_pairs)
	{
		throw std::length_error("exact OJS subset sum is limited to N <= 20; use ojs_integral_oracle for larger N");
	}

	CompensatedSum total;
	for (std::size_t i = 0; i < n; ++i)
	{
		total += config.pairs[i].alpha * ojs_bracket(config, i, gamma);
	}
	return {total.value(), false};
}

/// Quadrature of the all-positive product form of the OJS bracket for pair i.
[[nodiscard]] inline double ojs_integral_oracle(SystemConfig const& config, std::size_t i, double gamma)
{
	detail::require_pair_index(config, i);
	detail::require_positive_snr(gamma);
	if (config.size() < 2)
	{
		throw std::invalid_argument("OJS oracle needs at least one candidate jammer");
	}
	std::vector<double> jam;
	for (std::size_t j = 0; j < config.size(); ++j)
	{
		if (j != i)
		{
			jam.push_back(config.pairs[j].sigma2_se * gamma);
		}
	}
	double const split = 0.5 * *std::max_element(jam.begin(), jam.end());
	auto const& active = config.pairs[i];
	return detail::integrate_against_ratio_density(active.sigma2_sd, active.sigma2_se, split,
		[&jam](double t) {
			double product = 1.0;
			for (double s : jam)
			{
				product *= -std::expm1(-2.0 * t / s);
			}
			return product;
		});
}

/// RJS probability assembled from rjs_integral_oracle terms.
[[nodiscard]] inline double intercept_sc_rjs_by_quadrature(SystemConfig const& config, double gamma)
{
	require_valid(config);
	std::size_t const n = config.size();
	if (n < 2)
	{
		throw std::invalid_argument("cooperative schemes need N >= 2");
	}
	CompensatedSum total;
	for (std::size_t i = 0; i < n; ++i)
	{
		CompensatedSum over_jammers;
		for (std::size_t j = 0; j < n; ++j)
		{
			if (j != i)
			{
				over_jammers += rjs_integral_oracle(config, i, j, gamma);
			}
		}
		total += config.pairs[i].alpha * (over_jammers.value() / static_cast<double>(n - 1));
	}
	return total.value();
}

/// OJS probability assembled from ojs_integral_oracle brackets; any N >= 2.
[[nodiscard]] inline double intercept_sc_ojs_by_quadrature(SystemConfig const& config, double gamma)
{
	require_valid(config);
	if (config.size() < 2)
	{
		throw std::invalid_argument("cooperative schemes need N >= 2");
	}
	CompensatedSum total;
	for (std::size_t i = 0; i < config.size(); ++i)
	{
		total += config.pairs[i].alpha * ojs_integral_oracle(config, i, gamma);
	}
	return total.value();
}

[[nodiscard]] inline InterceptProbability intercept_probability(Scheme scheme, SystemConfig const& config, double gamma)
{
	switch (scheme)
	{
		case Scheme::noncoop:
			detail::require_positive_snr(gamma);
			return {intercept_noncoop(config), false};
		case Scheme::random_jammer:
			return intercept_sc_rjs(config, gamma);
		case Scheme::optimal_jammer:
			return intercept_sc_ojs(config, gamma);
	}
	throw std::invalid_argument("unknown scheme");
}

} // namespace secjam

#endif // SECJAM_ANALYTIC_HPP
