#ifndef SECJAM_SUMMATION_HPP
#define SECJAM_SUMMATION_HPP

#include <cmath>

namespace secjam {

/// Neumaier's variant of Kahan compensated summation.
class CompensatedSum
{
public:
	CompensatedSum& operator+=(double value) noexcept
	{
		double const t = sum_ + value;
		if (std::abs(sum_) >= std::abs(value))
		{
			compensation_ += (sum_ - t) + value;
		}
		else
		{
			compensation_ += (value - t) + sum_;
		}
		sum_ = t;
		return *this;
	}

	CompensatedSum& operator-=(double value) noexcept { return *this += -value; }

	[[nodiscard]] double value() const noexcept { return sum_ + compensation_; }

private:
	double sum_ = 0.0;
	double compensation_ = 0.0;
};

} // namespace secjam

#endif // SECJAM_SUMMATION_HPP
