#include <secjam/config_io.hpp>

#include <gtest/gtest.h>

#include <string>

using namespace secjam;

TEST(ConfigIo, LoadsHeterogeneousFile)
{
	auto const c = load_config(std::string(SECJAM_TEST_DATA_DIR) + "/hetero.cfg");
	ASSERT_EQ(c.size(), 3u);
	EXPECT_DOUBLE_EQ(c[0].sigma2_sd, 2.0);
	EXPECT_DOUBLE_EQ(c[0].sigma2_se, 0.5);
	EXPECT_DOUBLE_EQ(c[0].alpha, 0.3);
	EXPECT_DOUBLE_EQ(c[2].alpha, 0.4);
}

TEST(ConfigIo, CommentsAndBlankLines)
{
	auto const c = parse_config("# header\n\n  1 2 0.5   # trailing\n\t3 4 0.5\n");
	ASSERT_EQ(c.size(), 2u);
	EXPECT_DOUBLE_EQ(c[1].sigma2_sd, 3.0);
	EXPECT_DOUBLE_EQ(c[1].sigma2_se, 4.0);
}

TEST(ConfigIo, SymmetricShorthand)
{
	auto const c = parse_config("symmetric 4 2.5\n");
	ASSERT_EQ(c.size(), 4u);
	for (auto const& p : c.pairs)
	{
		EXPECT_DOUBLE_EQ(p.sigma2_sd / p.sigma2_se, 2.5);
		EXPECT_DOUBLE_EQ(p.alpha, 0.25);
	}
}

TEST(ConfigIo, ErrorsCarryLineNumbers)
{
	try
	{
		(void)parse_config("1 1 0.5\n\n1 x 0.5\n");
		FAIL() << "expected ConfigParseError";
	}
	catch (ConfigParseError const& e)
	{
		EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
	}
	EXPECT_THROW((void)parse_config("1 1\n"), ConfigParseError);
	EXPECT_THROW((void)parse_config("1 1 0.5\nsymmetric 2 1\n"), ConfigParseError);
	EXPECT_THROW((void)parse_config("symmetric 2 1\n1 1 0.5\n"), ConfigParseError);
	EXPECT_THROW((void)parse_config("symmetric 0 1\n"), ConfigParseError);
	EXPECT_THROW((void)parse_config(""), ConfigParseError);
}

TEST(ConfigIo, ValidationFailuresSurface)
{
	try
	{
		(void)load_config(std::string(SECJAM_TEST_DATA_DIR) + "/bad_duty_cycles.cfg");
		FAIL() << "expected ConfigParseError";
	}
	catch (ConfigParseError const& e)
	{
		EXPECT_NE(std::string(e.what()).find("duty cycles sum 1.2 > 1"), std::string::npos) << e.what();
	}
	EXPECT_THROW((void)parse_config("1 -1 0.5\n"), ConfigParseError);
	EXPECT_THROW((void)load_config("/nonexistent/secjam.cfg"), std::runtime_error);
}

TEST(ConfigIo, FormatRoundTrip)
{
	SystemConfig const c{{{0.1, 1.0 / 3.0, 0.2}, {7e-5, 12345.678, 0.3}, {1.0, 1.0, 0.5}}};
	auto const back = parse_config(format_config(c));
	ASSERT_EQ(back.size(), c.size());
	for (std::size_t i = 0; i < c.size(); ++i)
	{
		EXPECT_EQ(back[i].sigma2_sd, c[i].sigma2_sd);
		EXPECT_EQ(back[i].sigma2_se, c[i].sigma2_se);
		EXPECT_EQ(back[i].alpha, c[i].alpha);
	}
}
