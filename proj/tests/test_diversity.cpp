#include <secjam/diversity.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace secjam;

namespace {

std::vector<CurvePoint> sample(double (*f)(double), std::vector<double> const& gammas)
{
	std::vector<CurvePoint> out;
	for (double g : gammas)
	{
		out.push_back({g, f(g)});
	}
	return out;
}

std::vector<double> window_values() { return default_diversity_window().values(); }

} // namespace

TEST(FitLogLog, InverseLawHasUnitDiversity)
{
	auto const curve = sample([](double g) { return 3.0 / g; }, window_values());
	auto const fit = fit_log_log(curve);
	EXPECT_NEAR(fit.slope, -1.0, 1e-12);
	EXPECT_NEAR(fit.diversity, 1.0, 1e-12);
	EXPECT_LT(fit.max_residual, 1e-10);
	EXPECT_EQ(fit.points, 9u);
	EXPECT_DOUBLE_EQ(fit.gamma_lo, 1e5);
	EXPECT_DOUBLE_EQ(fit.gamma_hi, 1e6);
}

TEST(FitLogLog, ConstantHasZeroDiversity)
{
	auto const fit = fit_log_log(sample([](double) { return 0.25; }, window_values()));
	EXPECT_NEAR(fit.slope, 0.0, 1e-14);
}

TEST(FitLogLog, LogOverGammaTwoPointSlope)
{
	auto const fit = fit_log_log(sample([](double g) { return std::log(g) / g; }, {1e5, 1e6}));
	EXPECT_NEAR(fit.slope, -0.9208187539523752, 1e-12);
}

TEST(FitLogLog, RejectsDegenerateCurves)
{
	std::vector<CurvePoint> const zero{{1.0, 0.5}, {10.0, 0.0}};
	EXPECT_THROW((void)fit_log_log(zero), std::domain_error);
	std::vector<CurvePoint> const one{{1.0, 0.5}};
	EXPECT_THROW((void)fit_log_log(one), std::invalid_argument);
	std::vector<CurvePoint> const unordered{{10.0, 0.5}, {1.0, 0.4}};
	EXPECT_THROW((void)fit_log_log(unordered), std::invalid_argument);
}

TEST(FitDiversity, NonCoopIsFlat)
{
	auto const fit = fit_diversity(Scheme::noncoop, make_symmetric_config(4, 1.0), default_diversity_window());
	EXPECT_NEAR(fit.diversity, 0.0, 1e-12);
}

TEST(FitDiversity, RjsNearUnity)
{
	auto const fit = fit_diversity(Scheme::random_jammer, make_symmetric_config(4, 1.0), default_diversity_window());
	EXPECT_GE(fit.diversity, 0.85);
	EXPECT_LE(fit.diversity, 1.0);
}

TEST(FitDiversity, OjsApproachesInverseLaw)
{
	// For N >= 3 the optimal-jammer probability behaves as c / gamma with no
	// logarithmic factor, so its finite-window estimate sits right at 1.
	auto const fit = fit_diversity(Scheme::optimal_jammer, make_symmetric_config(4, 1.0), default_diversity_window());
	EXPECT_GT(fit.diversity, 0.999);
	EXPECT_LE(fit.diversity, 1.0);
}

TEST(FitDiversity, TwoPairsSchemesCoincide)
{
	auto const config = make_symmetric_config(2, 1.0);
	auto const r = fit_diversity(Scheme::random_jammer, config, default_diversity_window());
	auto const o = fit_diversity(Scheme::optimal_jammer, config, default_diversity_window());
	EXPECT_EQ(r.diversity, o.diversity);
}

TEST(LocalSlopes, InsideUnitIntervalAndSteepening)
{
	auto const config = make_symmetric_config(4, 1.0);
	auto const curve = intercept_curve(Scheme::random_jammer, config, SnrSweep::logspace(1e1, 1e6, 26), AnalyticSource{});
	auto const slopes = local_slopes(curve);
	ASSERT_EQ(slopes.size(), 25u);
	for (std::size_t k = 0; k < slopes.size(); ++k)
	{
		EXPECT_GT(slopes[k], -1.0);
		EXPECT_LT(slopes[k], 0.0);
		if (k > 0)
		{
			EXPECT_LE(slopes[k], slopes[k - 1]);
		}
	}
}

TEST(FitDiversity, SimulatedSourceRoughlyAgrees)
{
	auto const config = make_symmetric_config(2, 1.0);
	auto const window = SnrSweep::logspace(1e1, 1e2, 3);
	auto const analytic = fit_diversity(Scheme::random_jammer, config, window);
	auto const simulated = fit_diversity(Scheme::random_jammer, config, window, SimulatedSource{2'000'000, RngSpec{42}, 0});
	EXPECT_NEAR(simulated.diversity, analytic.diversity, 0.05);
}
