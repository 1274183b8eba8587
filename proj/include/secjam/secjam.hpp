#ifndef SECJAM_SECJAM_HPP
#define SECJAM_SECJAM_HPP

#include <secjam/analytic.hpp>
#include <secjam/config_io.hpp>
#include <secjam/diversity.hpp>
#include <secjam/experiments.hpp>
#include <secjam/model.hpp>
#include <secjam/quadrature.hpp>
#include <secjam/rng.hpp>
#include <secjam/simulate.hpp>
#include <secjam/special.hpp>
#include <secjam/subsets.hpp>
#include <secjam/summation.hpp>
#include <secjam/validation.hpp>

#endif // SECJAM_SECJAM_HPP
