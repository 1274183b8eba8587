/**
 * \file secjam/subsets.hpp
 *
 * \brief Enumeration of the non-empty subcollections J_k of the candidate
 *  jammer set {S - S_i}.
 */

#ifndef SECJAM_SUBSETS_HPP
#define SECJAM_SUBSETS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace secjam {

/// Non-empty subset of candidates, as a bit mask over candidate positions.
struct Subcollection
{
	std::uint64_t mask;
	int size;

	/// Positions (into the candidate list) of the members, ascending.
	[[nodiscard]] std::vector<std::size_t> positions() const
	{
		std::vector<std::size_t> out;
		out.reserve(static_cast<std::size_t>(size));
		for (std::uint64_t m = mask; m != 0; m &= m - 1)
		{
			out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
		}
		return out;
	}
};

/**
 * Yields all 2^n - 1 non-empty subsets of n candidates in binary-counter
 * order (mask = 1, 2, ..., 2^n - 1).
 */
class SubsetIterator
{
public:
	static constexpr std::size_t max_candidates = 62;

	explicit SubsetIterator(std::size_t candidates)
	: candidates_(candidates)
	{
		if (candidates > max_candidates)
		{
			throw std::length_error("too many candidates for subset enumeration");
		}
	}

	class iterator
	{
	public:
		using iterator_category = std::input_iterator_tag;
		using value_type = Subcollection;
		using difference_type = std::ptrdiff_t;
		using pointer = void;
		using reference = Subcollection;

		iterator() = default;
		explicit iterator(std::uint64_t mask) : mask_(mask) {}

		Subcollection operator*() const { return {mask_, std::popcount(mask_)}; }
		iterator& operator++() { ++mask_; return *this; }
		iterator operator++(int) { auto old = *this; ++mask_; return old; }
		bool operator==(iterator const&) const = default;

	private:
		std::uint64_t mask_ = 1;
	};

	[[nodiscard]] iterator begin() const { return iterator{1}; }
	[[nodiscard]] iterator end() const { return iterator{std::uint64_t{1} << candidates_}; }
	[[nodiscard]] std::uint64_t count() const { return (std::uint64_t{1} << candidates_) - 1; }
	[[nodiscard]] std::size_t candidates() const noexcept { return candidates_; }

private:
	std::size_t candidates_;
};

} // namespace secjam

#endif // SECJAM_SUBSETS_HPP
