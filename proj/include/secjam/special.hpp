/**
 * \file secjam/special.hpp
 *
 * \brief Exponential integral E1(x) = int_x^inf e^{-t}/t dt for x > 0, its
 *  overflow-safe scaled form exp(x) E1(x), and the elementary bracket
 *  1/2 e^{-x} ln(1 + 2/x) <= E1(x) <= e^{-x} ln(1 + 1/x).
 *
 * The intercept formulas write this function as "Ei"; it is E1, not the
 * principal-value Ei.
 */

#ifndef SECJAM_SPECIAL_HPP
#define SECJAM_SPECIAL_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace secjam {

struct E1Bounds
{
	double lower;
	double upper;
};

namespace detail {

inline void require_positive_argument(double x)
{
	if (!(x > 0.0))
	{
		throw std::domain_error("exponential integral E1 needs a positive argument");
	}
}

/// Power series, x <= 1: E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!).
inline double e1_series(double x)
{
	double term = 1.0;  // (-x)^k / k!
	double sum = 0.0;
	for (int k = 1; k < 200; ++k)
	{
		term *= -x / static_cast<double>(k);
		double const contrib = term / static_cast<double>(k);
		sum += contrib;
		if (std::abs(contrib) < std::abs(sum) * 1e-17)
		{
			break;
		}
	}
	return -std::numbers::egamma - std::log(x) - sum;
}

/// Continued fraction (modified Lentz), x > 1. Returns exp(x) E1(x).
inline double e1_scaled_continued_fraction(double x)
{
	constexpr double tiny = 1e-300;
	constexpr double eps = std::numeric_limits<double>::epsilon();

	double b = x + 1.0;
	double c = 1.0 / tiny;
	double d = 1.0 / b;
	double h = d;
	for (int i = 1; i < 10000; ++i)
	{
		double const an = -static_cast<double>(i) * static_cast<double>(i);
		b += 2.0;
		d = 1.0 / (an * d + b);
		c = b + an / c;
		double const del = c * d;
		h *= del;
		if (std::abs(del - 1.0) <= eps)
		{
			return h;
		}
	}
	throw std::runtime_error("E1 continued fraction failed to converge");
}

inline constexpr double e1_crossover = 1.0;

} // namespace detail

/// E1(x) for x > 0. Underflows to 0 for x beyond ~745.
[[nodiscard]] inline double e1(double x)
{
	detail::require_positive_argument(x);
	if (x <= detail::e1_crossover)
	{
		return detail::e1_series(x);
	}
	if (std::isinf(x))
	{
		return 0.0;
	}
	return std::exp(-x) * detail::e1_scaled_continued_fraction(x);
}

/// exp(x) E1(x) for x > 0, finite for every representable x.
[[nodiscard]] inline double e1_scaled(double x)
{
	detail::require_positive_argument(x);
	if (x <= detail::e1_crossover)
	{
		return std::exp(x) * detail::e1_series(x);
	}
	if (std::isinf(x))
	{
		return 0.0;
	}
	// exp(x) E1(x) = 1/x (1 - 1/x + ...) is below 1/x; the fraction would only lose
	// accuracy to the subnormal range far past 1e300, so short-circuit there.
	if (x > 1e300)
	{
		return 1.0 / x;
	}
	return detail::e1_scaled_continued_fraction(x);
}

[[nodiscard]] inline E1Bounds e1_bounds(double x)
{
	detail::require_positive_argument(x);
	double const decay = std::exp(-x);
	return E1Bounds{0.5 * decay * std::log1p(2.0 / x), decay * std::log1p(1.0 / x)};
}

} // namespace secjam

#endif // SECJAM_SPECIAL_HPP
