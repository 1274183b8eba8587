/**
 * \file secjam/rng.hpp
 *
 * \brief Counter-based random streams: every (seed, pair, trial) triple
 *  keys its own SplitMix64 sequence, so results do not depend on how trials
 *  are divided among workers.
 */

#ifndef SECJAM_RNG_HPP
#define SECJAM_RNG_HPP

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace secjam {

struct RngSpec
{
	std::uint64_t seed = 42;
};

[[nodiscard]] constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept
{
	z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
	z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
	return z ^ (z >> 31);
}

/// A fresh seed derived from `seed`, for reruns that must not reuse the streams.
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) noexcept
{
	return splitmix64_mix(seed ^ splitmix64_mix(salt + 0x632BE59BD9B4E019ULL));
}

class CounterRng
{
public:
	static constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

	CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept
	: state_(splitmix64_mix(splitmix64_mix(seed ^ splitmix64_mix(stream + golden_gamma)) + counter * golden_gamma))
	{
	}

	std::uint64_t next() noexcept
	{
		state_ += golden_gamma;
		return splitmix64_mix(state_);
	}

	/// Uniform on (0, 1]; never returns 0 so that -ln(u) stays finite.
	double uniform_open_closed() noexcept
	{
		return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
	}

	/// Uniform integer in [0, n), n > 0 (Lemire's multiply-shift with rejection).
	std::uint64_t below(std::uint64_t n) noexcept
	{
		unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
		auto low = static_cast<std::uint64_t>(m);
		if (low < n)
		{
			std::uint64_t const threshold = (0 - n) % n;
			while (low < threshold)
			{
				m = static_cast<unsigned __int128>(next()) * n;
				low = static_cast<std::uint64_t>(m);
			}
		}
		return static_cast<std::uint64_t>(m >> 64);
	}

private:
	std::uint64_t state_;
};

/// Accepts a decimal or 0x-prefixed hexadecimal 64-bit value.
[[nodiscard]] inline std::uint64_t parse_seed(std::string_view text)
{
	int base = 10;
	if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X'))
	{
		text.remove_prefix(2);
		base = 16;
	}
	std::uint64_t value = 0;
	auto const* end = text.data() + text.size();
	auto const [ptr, ec] = std::from_chars(text.data(), end, value, base);
	if (text.empty() || ec != std::errc{} || ptr != end)
	{
		throw std::invalid_argument("seed must be a decimal or 0x-hex 64-bit integer: '" + std::string(text) + "'");
	}
	return value;
}

} // namespace secjam

#endif // SECJAM_RNG_HPP
