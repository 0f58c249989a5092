#pragma once

#include <holoext/gauss.hpp>

#include <utility>
#include <vector>

namespace holoext {

/// Rational point of the unit circle: t -> ((1 - t^2) + 2t i) / (1 + t^2).
/// |tau|^2 = 1 holds exactly, no radicals involved.
GaussRational circle_point(const Rational& t);

/// Rational pair (r1, r2) with r1^2 + r2^2 = 1:
/// r1 = (1 - u^2)/(1 + u^2), r2 = 2u/(1 + u^2).
std::pair<Rational, Rational> pythagorean_pair(const Rational& u);

/// Exact point of the sphere |z1|^2 + |z2|^2 = 1: circle phases t1, t2 on a
/// Pythagorean modulus split u.
std::pair<GaussRational, GaussRational> sphere_point(const Rational& t1, const Rational& t2,
                                                     const Rational& u);

/// Deterministic list of distinct exact sphere points.
std::vector<std::pair<GaussRational, GaussRational>> sphere_points(std::size_t count);

/// Deterministic list of distinct exact circle points.
std::vector<GaussRational> circle_points(std::size_t count);

}  // namespace holoext
