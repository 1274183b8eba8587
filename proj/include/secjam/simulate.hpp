/**
 * \file secjam/simulate.hpp
 *
 * \brief Monte Carlo estimation of intercept probabilities from Rayleigh
 *  fading draws.
 *
 * Events are evaluated on squared channel gains: since log2(1 + x) is
 * monotone, comparing capacities reduces to comparing SNR expressions.
 * Estimation is stratified over pairs: each pair gets ceil(trials/N) draws
 * and the conditional frequencies are mixed with the exact duty cycles.
 */

#ifndef SECJAM_SIMULATE_HPP
#define SECJAM_SIMULATE_HPP

#include <secjam/analytic.hpp>
#include <secjam/model.hpp>
#include <secjam/rng.hpp>
#include <secjam/summation.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

namespace secjam {

/// One joint realization of the squared gains seen by active pair i.
struct ChannelDraw
{
	double g_sd = 0.0;
	double g_se = 0.0;
	std::vector<double> g_je;  ///< one per candidate jammer j != i, ascending j
};

struct InterceptEstimate
{
	Scheme scheme = Scheme::noncoop;
	double gamma = 1.0;
	double p_hat = 0.0;
	std::uint64_t trials = 0;
	double std_err = 0.0;
	bool degraded = false;
};

/// Pair index of the k-th candidate jammer of active pair i.
[[nodiscard]] constexpr std::size_t candidate_pair(std::size_t active, std::size_t position) noexcept
{
	return position < active ? position : position + 1;
}

inline void sample_draw(SystemConfig const& config, std::size_t i, CounterRng& rng, ChannelDraw& out)
{
	if (i >= config.size())
	{
		throw std::out_of_range("pair index out of range");
	}
	auto exponential = [&rng](double mean) { return -mean * std::log(rng.uniform_open_closed()); };

	auto const& active = config.pairs[i];
	out.g_sd = exponential(active.sigma2_sd);
	out.g_se = exponential(active.sigma2_se);
	out.g_je.resize(config.size() - 1);
	for (std::size_t k = 0; k < out.g_je.size(); ++k)
	{
		out.g_je[k] = exponential(config.pairs[candidate_pair(i, k)].sigma2_se);
	}
}

[[nodiscard]] inline ChannelDraw sample_draw(SystemConfig const& config, std::size_t i, CounterRng& rng)
{
	ChannelDraw draw;
	sample_draw(config, i, rng, draw);
	return draw;
}

/// Main capacity strictly below the wiretap capacity without jamming.
[[nodiscard]] inline bool event_noncoop(ChannelDraw const& draw) noexcept
{
	return draw.g_sd < draw.g_se;
}

/**
 * Intercept under cooperative jamming by candidate `jammer`:
 * g_je gamma + 2 < 2 g_se / g_sd, evaluated as g_sd (g_je gamma + 2) < 2 g_se.
 */
[[nodiscard]] inline bool event_sc(ChannelDraw const& draw, std::size_t jammer, double gamma)
{
	return draw.g_sd * (draw.g_je.at(jammer) * gamma + 2.0) < 2.0 * draw.g_se;
}

/// Equiprobable choice among `candidates`, without channel knowledge.
[[nodiscard]] inline std::size_t select_jammer_random(std::size_t candidates, CounterRng& rng)
{
	if (candidates == 0)
	{
		throw std::invalid_argument("no candidate jammers");
	}
	return static_cast<std::size_t>(rng.below(candidates));
}

/// Candidate with the strongest jammer-to-eavesdropper gain; lowest index on ties.
[[nodiscard]] inline std::size_t select_jammer_optimal(ChannelDraw const& draw)
{
	if (draw.g_je.empty())
	{
		throw std::invalid_argument("no candidate jammers");
	}
	return static_cast<std::size_t>(std::max_element(draw.g_je.begin(), draw.g_je.end()) - draw.g_je.begin());
}

namespace detail {

[[nodiscard]] inline unsigned resolve_workers(unsigned workers, std::uint64_t work)
{
	if (workers == 0)
	{
		workers = std::max(1u, std::thread::hardware_concurrency());
	}
	return static_cast<unsigned>(std::clamp<std::uint64_t>(work / 4096, 1, workers));
}

/**
 * Sums `count(first, last)` over [0, total) split across workers. Each call
 * handles a contiguous trial range and returns an integer, so the result
 * does not depend on the split.
 */
template <typename Count>
std::uint64_t sharded_count(std::uint64_t total, unsigned workers, Count const& count)
{
	unsigned const shards = resolve_workers(workers, total);
	if (shards == 1)
	{
		return count(std::uint64_t{0}, total);
	}
	std::vector<std::uint64_t> partial(shards, 0);
	{
		std::vector<std::jthread> threads;
		threads.reserve(shards);
		for (unsigned s = 0; s < shards; ++s)
		{
			std::uint64_t const first = total * s / shards;
			std::uint64_t const last = total * (s + 1) / shards;
			threads.emplace_back([&, s, first, last] { partial[s] = count(first, last); });
		}
	}
	std::uint64_t sum = 0;
	for (auto v : partial)
	{
		sum += v;
	}
	return sum;
}

[[nodiscard]] inline std::uint64_t trials_per_pair(std::uint64_t trials, std::size_t pairs)
{
	return (trials + pairs - 1) / pairs;
}

} // namespace detail

/**
 * Stratified estimate p_hat = sum_i alpha_i p_i with per-pair binomial
 * variance propagated into std_err. Deterministic for a given RngSpec and
 * independent of `workers` (0 = hardware concurrency).
 */
[[nodiscard]] inline InterceptEstimate estimate_intercept(SystemConfig const& config, Scheme scheme, double gamma, std::uint64_t trials, RngSpec const& rng, unsigned workers = 0)
{
	require_valid(config);
	if (trials == 0)
	{
		throw std::invalid_argument("need at least one trial");
	}
	if (!(gamma > 0.0) || !std::isfinite(gamma))
	{
		throw std::invalid_argument("SNR must be positive and finite");
	}

	std::size_t const n = config.size();
	bool const degraded = scheme != Scheme::noncoop && n == 1;
	Scheme const effective = degraded ? Scheme::noncoop : scheme;
	std::uint64_t const per_pair = detail::trials_per_pair(trials, n);

	CompensatedSum p_hat;
	CompensatedSum variance;
	for (std::size_t i = 0; i < n; ++i)
	{
		auto count = [&](std::uint64_t first, std::uint64_t last) {
			ChannelDraw draw;
			std::uint64_t hits = 0;
			for (std::uint64_t t = first; t < last; ++t)
			{
				CounterRng stream(rng.seed, i, t);
				sample_draw(config, i, stream, draw);
				bool hit = false;
				switch (effective)
				{
					case Scheme::noncoop:
						hit = event_noncoop(draw);
						break;
					case Scheme::random_jammer:
						hit = event_sc(draw, select_jammer_random(draw.g_je.size(), stream), gamma);
						break;
					case Scheme::optimal_jammer:
						hit = event_sc(draw, select_jammer_optimal(draw), gamma);
						break;
				}
				hits += hit ? 1 : 0;
			}
			return hits;
		};
		std::uint64_t const hits = detail::sharded_count(per_pair, workers, count);
		double const p = static_cast<double>(hits) / static_cast<double>(per_pair);
		double const alpha = config.pairs[i].alpha;
		p_hat += alpha * p;
		variance += alpha * alpha * p * (1.0 - p) / static_cast<double>(per_pair);
	}

	InterceptEstimate out;
	out.scheme = scheme;
	out.gamma = gamma;
	out.p_hat = std::clamp(p_hat.value(), 0.0, 1.0);
	out.trials = per_pair * n;
	out.std_err = std::sqrt(std::max(0.0, variance.value()));
	out.degraded = degraded;
	return out;
}

/**
 * Counts draws breaking the per-draw event chain
 *   event_sc(argmax jammer) => event_sc(j) for every j => event_noncoop
 * on shared draws. Must be zero.
 */
[[nodiscard]] inline std::uint64_t coupled_dominance_check(SystemConfig const& config, double gamma, std::uint64_t trials, RngSpec const& rng, unsigned workers = 0)
{
	require_valid(config);
	std::size_t const n = config.size();
	if (n < 2)
	{
		throw std::invalid_argument("dominance check needs N >= 2");
	}
	if (!(gamma > 0.0))
	{
		throw std::invalid_argument("SNR must be positive");
	}
	std::uint64_t const per_pair = detail::trials_per_pair(trials, n);

	std::uint64_t violations = 0;
	for (std::size_t i = 0; i < n; ++i)
	{
		auto count = [&](std::uint64_t first, std::uint64_t last) {
			ChannelDraw draw;
			std::uint64_t bad = 0;
			for (std::uint64_t t = first; t < last; ++t)
			{
				CounterRng stream(rng.seed, i, t);
				sample_draw(config, i, stream, draw);
				bool const optimal = event_sc(draw, select_jammer_optimal(draw), gamma);
				bool const noncoop = event_noncoop(draw);
				bool broken = false;
				for (std::size_t j = 0; j < draw.g_je.size(); ++j)
				{
					bool const any = event_sc(draw, j, gamma);
					broken = broken || (optimal && !any) || (any && !noncoop);
				}
				bad += broken ? 1 : 0;
			}
			return bad;
		};
		violations += detail::sharded_count(per_pair, workers, count);
	}
	return violations;
}

} // namespace secjam

#endif // SECJAM_SIMULATE_HPP
