#include <secjam/simulate.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <vector>

using namespace secjam;

namespace {

double binomial_sigma(double p, double n) { return std::sqrt(p * (1.0 - p) / n); }

ChannelDraw make_draw(double sd, double se, std::vector<double> je)
{
	return ChannelDraw{sd, se, std::move(je)};
}

} // namespace

TEST(SampleDraw, ShapesAndMeans)
{
	SystemConfig const c{{{2.0, 0.5, 0.5}, {1.0, 3.0, 0.25}, {1.0, 0.25, 0.25}}};
	constexpr std::uint64_t draws = 1'000'000;
	double sum_sd = 0.0, sum_se = 0.0, sum_j0 = 0.0, sum_j1 = 0.0;
	for (std::uint64_t t = 0; t < draws; ++t)
	{
		CounterRng rng(7, 0, t);
		auto const d = sample_draw(c, 0, rng);
		ASSERT_EQ(d.g_je.size(), 2u);
		sum_sd += d.g_sd;
		sum_se += d.g_se;
		sum_j0 += d.g_je[0];
		sum_j1 += d.g_je[1];
	}
	// Exponential: std dev equals the mean, so 4e-3 relative is 4 sigma at 1e6 draws.
	EXPECT_NEAR(sum_sd / draws, 2.0, 2.0 * 0.004);
	EXPECT_NEAR(sum_se / draws, 0.5, 0.5 * 0.004);
	EXPECT_NEAR(sum_j0 / draws, 3.0, 3.0 * 0.004);
	EXPECT_NEAR(sum_j1 / draws, 0.25, 0.25 * 0.004);
}

TEST(SampleDraw, UnitMeanSymmetryAndCdf)
{
	auto const c = make_symmetric_config(2, 1.0);
	constexpr std::uint64_t draws = 1'000'000;
	double sum = 0.0;
	std::uint64_t below_other = 0;
	std::uint64_t below_mean = 0;
	for (std::uint64_t t = 0; t < draws; ++t)
	{
		CounterRng rng(123, 1, t);
		auto const d = sample_draw(c, 1, rng);
		sum += d.g_sd;
		below_other += d.g_sd < d.g_se ? 1 : 0;
		below_mean += d.g_sd < 1.0 ? 1 : 0;
	}
	EXPECT_NEAR(sum / draws, 1.0, 0.004);
	EXPECT_NEAR(static_cast<double>(below_other) / draws, 0.5, 3.0 * binomial_sigma(0.5, draws));
	double const cdf = 1.0 - std::exp(-1.0);
	EXPECT_NEAR(static_cast<double>(below_mean) / draws, cdf, 3.0 * binomial_sigma(cdf, draws));
}

TEST(SampleDraw, RejectsBadIndex)
{
	CounterRng rng(1, 0, 0);
	EXPECT_THROW((void)sample_draw(make_symmetric_config(2, 1.0), 2, rng), std::out_of_range);
}

TEST(EventNonCoop, StrictComparison)
{
	EXPECT_FALSE(event_noncoop(make_draw(2.0, 1.0, {})));
	EXPECT_TRUE(event_noncoop(make_draw(1.0, 2.0, {})));
	EXPECT_FALSE(event_noncoop(make_draw(1.5, 1.5, {})));
}

TEST(EventSc, Substitutions)
{
	for (double g : {0.1, 1.0, 1e6})
	{
		EXPECT_FALSE(event_sc(make_draw(1.0, 1.0, {0.0}), 0, g));
	}
	EXPECT_TRUE(event_sc(make_draw(0.1, 1.0, {0.01}), 0, 10.0));
	EXPECT_TRUE(event_sc(make_draw(0.0, 1.0, {5.0}), 0, 10.0));
	EXPECT_FALSE(event_sc(make_draw(0.0, 0.0, {5.0}), 0, 10.0));
}

TEST(EventSc, MainStrongerNeverIntercepted)
{
	for (std::uint64_t t = 0; t < 20'000; ++t)
	{
		CounterRng rng(99, 0, t);
		auto const d = sample_draw(make_symmetric_config(4, 1.0), 0, rng);
		if (d.g_sd > d.g_se)
		{
			for (double g : {1e-6, 1.0, 1e6})
			{
				for (std::size_t j = 0; j < d.g_je.size(); ++j)
				{
					ASSERT_FALSE(event_sc(d, j, g));
				}
			}
		}
	}
}

TEST(SelectRandom, UniformOverThree)
{
	constexpr std::uint64_t trials = 300'000;
	std::vector<std::uint64_t> counts(3, 0);
	for (std::uint64_t t = 0; t < trials; ++t)
	{
		CounterRng rng(5, 0, t);
		++counts[select_jammer_random(3, rng)];
	}
	double const tol = 3.0 * std::sqrt(1e5 * (1.0 / 3.0) * (2.0 / 3.0));
	for (auto c : counts)
	{
		EXPECT_NEAR(static_cast<double>(c), 1e5, tol);
	}
}

TEST(SelectRandom, SingleAndEmpty)
{
	CounterRng rng(5, 0, 0);
	for (int k = 0; k < 100; ++k)
	{
		EXPECT_EQ(select_jammer_random(1, rng), 0u);
	}
	EXPECT_THROW((void)select_jammer_random(0, rng), std::invalid_argument);
}

TEST(SelectRandom, IndependentOfJammerGains)
{
	// Chi-square of selection against which candidate holds the largest gain.
	// 2x2 table, 1 dof; critical value 6.635 at alpha = 0.01.
	auto const c = make_symmetric_config(3, 1.0);
	double table[2][2] = {{0, 0}, {0, 0}};
	for (std::uint64_t t = 0; t < 200'000; ++t)
	{
		CounterRng rng(2024, 0, t);
		auto const d = sample_draw(c, 0, rng);
		auto const chosen = select_jammer_random(d.g_je.size(), rng);
		table[select_jammer_optimal(d)][chosen] += 1.0;
	}
	double total = 0.0, rows[2] = {0, 0}, cols[2] = {0, 0};
	for (int r = 0; r < 2; ++r)
	{
		for (int k = 0; k < 2; ++k)
		{
			rows[r] += table[r][k];
			cols[k] += table[r][k];
			total += table[r][k];
		}
	}
	double chi2 = 0.0;
	for (int r = 0; r < 2; ++r)
	{
		for (int k = 0; k < 2; ++k)
		{
			double const expected = rows[r] * cols[k] / total;
			chi2 += (table[r][k] - expected) * (table[r][k] - expected) / expected;
		}
	}
	EXPECT_LT(chi2, 6.635);
}

TEST(SelectOptimal, ArgmaxWithLowestIndexTies)
{
	EXPECT_EQ(select_jammer_optimal(make_draw(1, 1, {0.2, 1.7, 0.9})), 1u);
	EXPECT_EQ(select_jammer_optimal(make_draw(1, 1, {0.4})), 0u);
	EXPECT_EQ(select_jammer_optimal(make_draw(1, 1, {0.5, 2.0, 2.0})), 1u);
	EXPECT_THROW((void)select_jammer_optimal(make_draw(1, 1, {})), std::invalid_argument);
}

TEST(SelectOptimal, PermutationEquivariant)
{
	std::vector<double> const gains{0.3, 2.2, 0.7, 1.1};
	std::vector<std::size_t> const perm{2, 0, 3, 1};
	std::vector<double> permuted(gains.size());
	for (std::size_t k = 0; k < perm.size(); ++k)
	{
		permuted[k] = gains[perm[k]];
	}
	auto const original = select_jammer_optimal(make_draw(1, 1, gains));
	auto const moved = select_jammer_optimal(make_draw(1, 1, permuted));
	EXPECT_EQ(perm[moved], original);
}

TEST(Estimate, SymmetricNonCoopIsHalf)
{
	auto const est = estimate_intercept(make_symmetric_config(4, 1.0), Scheme::noncoop, 3.0, 1'000'000, RngSpec{42});
	EXPECT_NEAR(est.p_hat, 0.5, 3.0 * 0.0005);
	EXPECT_EQ(est.trials, 1'000'000u);
	EXPECT_NEAR(est.std_err, 0.0005, 1e-5);
	EXPECT_FALSE(est.degraded);
}

TEST(Estimate, DeterministicAndShardInvariant)
{
	auto const c = SystemConfig{{{2.0, 0.5, 0.3}, {1.0, 1.0, 0.2}, {0.5, 2.0, 0.4}}};
	for (Scheme s : {Scheme::noncoop, Scheme::random_jammer, Scheme::optimal_jammer})
	{
		auto const a = estimate_intercept(c, s, 5.0, 200'000, RngSpec{0xDEADBEEF}, 1);
		auto const b = estimate_intercept(c, s, 5.0, 200'000, RngSpec{0xDEADBEEF}, 1);
		auto const sharded = estimate_intercept(c, s, 5.0, 200'000, RngSpec{0xDEADBEEF}, 13);
		EXPECT_EQ(a.p_hat, b.p_hat);
		EXPECT_EQ(a.p_hat, sharded.p_hat);
		EXPECT_EQ(a.std_err, sharded.std_err);
	}
}

TEST(Estimate, NonCoopIgnoresSnr)
{
	auto const c = make_symmetric_config(3, 0.5);
	auto const low = estimate_intercept(c, Scheme::noncoop, 1.0, 100'000, RngSpec{9});
	auto const high = estimate_intercept(c, Scheme::noncoop, 1e3, 100'000, RngSpec{9});
	EXPECT_EQ(low.p_hat, high.p_hat);
}

TEST(Estimate, RjsAgreesWithClosedForm)
{
	auto const c = make_symmetric_config(2, 1.0);
	auto const est = estimate_intercept(c, Scheme::random_jammer, 10.0, 10'000'000, RngSpec{42});
	double const exact = intercept_sc_rjs(c, 10.0).value;
	EXPECT_LE(std::abs(est.p_hat - exact), 3.0 * est.std_err);
}

TEST(Estimate, OjsAgreesWithClosedFormOnHeterogeneousConfig)
{
	auto const c = SystemConfig{{{2.0, 0.5, 0.3}, {1.0, 1.0, 0.2}, {0.5, 2.0, 0.4}}};
	auto const est = estimate_intercept(c, Scheme::optimal_jammer, 5.0, 3'000'000, RngSpec{11});
	EXPECT_LE(std::abs(est.p_hat - intercept_sc_ojs(c, 5.0).value), 3.0 * est.std_err);
}

TEST(Estimate, SinglePairScFallsBack)
{
	auto const c = make_symmetric_config(1, 1.0);
	auto const sc = estimate_intercept(c, Scheme::optimal_jammer, 10.0, 50'000, RngSpec{3});
	auto const nonc = estimate_intercept(c, Scheme::noncoop, 10.0, 50'000, RngSpec{3});
	EXPECT_TRUE(sc.degraded);
	EXPECT_EQ(sc.p_hat, nonc.p_hat);
}

TEST(Estimate, RejectsBadArguments)
{
	auto const c = make_symmetric_config(2, 1.0);
	EXPECT_THROW((void)estimate_intercept(c, Scheme::noncoop, 1.0, 0, RngSpec{}), std::invalid_argument);
	EXPECT_THROW((void)estimate_intercept(c, Scheme::noncoop, 0.0, 10, RngSpec{}), std::invalid_argument);
}

TEST(Dominance, NoViolations)
{
	EXPECT_EQ(coupled_dominance_check(make_symmetric_config(4, 1.0), 10.0, 1'000'000, RngSpec{42}), 0u);
	EXPECT_EQ(coupled_dominance_check(make_symmetric_config(2, 1.0), 10.0, 200'000, RngSpec{42}), 0u);
	EXPECT_EQ(coupled_dominance_check(make_symmetric_config(5, 0.2), 1e-6, 200'000, RngSpec{7}), 0u);
	EXPECT_THROW((void)coupled_dominance_check(make_symmetric_config(1, 1.0), 1.0, 10, RngSpec{}), std::invalid_argument);
}

TEST(Rng, SeedParsing)
{
	EXPECT_EQ(parse_seed("42"), 42u);
	EXPECT_EQ(parse_seed("0x2A"), 42u);
	EXPECT_EQ(parse_seed("0xffffffffffffffff"), UINT64_MAX);
	EXPECT_EQ(parse_seed("18446744073709551615"), UINT64_MAX);
	EXPECT_THROW((void)parse_seed(""), std::invalid_argument);
	EXPECT_THROW((void)parse_seed("12a"), std::invalid_argument);
	EXPECT_THROW((void)parse_seed("18446744073709551616"), std::invalid_argument);
	EXPECT_THROW((void)parse_seed("-1"), std::invalid_argument);
}

TEST(Rng, UniformNeverZero)
{
	for (std::uint64_t t = 0; t < 100'000; ++t)
	{
		CounterRng rng(0, 0, t);
		double const u = rng.uniform_open_closed();
		ASSERT_GT(u, 0.0);
		ASSERT_LE(u, 1.0);
	}
}

TEST(Rng, StreamsDiffer)
{
	CounterRng a(1, 0, 0), b(1, 1, 0), c(1, 0, 1), d(2, 0, 0);
	auto const va = a.next();
	EXPECT_NE(va, b.next());
	EXPECT_NE(va, c.next());
	EXPECT_NE(va, d.next());
}
