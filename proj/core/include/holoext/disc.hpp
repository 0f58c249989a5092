#pragma once

#include <holoext/boundary.hpp>
#include <holoext/laurent.hpp>
#include <holoext/parampoly.hpp>

#include <map>
#include <utility>

namespace holoext {

/// The straight analytic disc through the boundary point z_o = (0, 1) with
/// direction parameter a:
///   D_a(tau) = ((tau - 1) a / (1 + |a|^2), (tau - 1) / (1 + |a|^2) + 1).
/// Requires |tau|^2 = 1 exactly; the result lies exactly on the sphere.
std::pair<GaussRational, GaussRational> disc_eval(const GaussRational& a,
                                                  const GaussRational& tau);

/// Pullback of boundary data to the circle: f(D_a(tau)) fully expanded and
/// reduced (conjugates substituted with conj(tau) = tau^-1). Exact.
LaurentPoly disc_pullback(const BPoly2& f, const GaussRational& a);

/// Pullback with the disc parameter kept formal. numerator holds, per tau
/// exponent, the ParamPoly coefficient of
///   (1 + alpha*abar)^cleared_power * f(D_a(tau)),
/// with cleared_power = weighted_degree(f) (0 for the zero polynomial).
struct SymbolicPullback {
    SparseLaurent<ParamPoly> numerator;
    unsigned cleared_power = 0;
};

SymbolicPullback disc_pullback_symbolic(const BPoly2& f);

}  // namespace holoext
