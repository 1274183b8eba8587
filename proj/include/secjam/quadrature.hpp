#ifndef SECJAM_QUADRATURE_HPP
#define SECJAM_QUADRATURE_HPP

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace secjam {

class QuadratureError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

struct QuadratureTolerance
{
	double relative = 1e-10;
	double absolute = 1e-300;
	unsigned max_depth = 30;
};

/**
 * Adaptive 61-point Gauss-Kronrod over [lo, hi]; hi may be +inf, in which
 * case the interval is mapped with x = lo + u/(1-u).
 *
 * Throws QuadratureError when the error estimate misses the tolerance.
 */
template <typename F>
double integrate_adaptive(F const& f, double lo, double hi, QuadratureTolerance const& tol = {})
{
	using boost::math::quadrature::gauss_kronrod;

	double error = 0.0;
	double l1 = 0.0;
	double const value = gauss_kronrod<double, 61>::integrate(f, lo, hi, tol.max_depth, tol.relative * 1e-2, &error, &l1);
	double const allowed = std::max(tol.absolute, tol.relative * std::abs(value));
	if (!std::isfinite(value) || !(error <= allowed))
	{
		std::ostringstream oss;
		oss << "quadrature did not converge on [" << lo << ", " << hi << "]: estimate " << value
			<< ", error " << error << " > " << allowed;
		throw QuadratureError(oss.str());
	}
	return value;
}

} // namespace secjam

#endif // SECJAM_QUADRATURE_HPP
