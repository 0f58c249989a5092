#pragma once

#include <holoext/disc.hpp>

namespace holoext {

/// The N-moment of f on the disc D_a, reported as mu where the contour
/// integral G(a, N) of tau^N * f(D_a(tau)) equals 2*pi*i * mu. G(a, N) = 0
/// iff mu = 0, and mu stays in the exact rational field.
GaussRational moment(const BPoly2& f, const GaussRational& a, unsigned N);

/// Closed form of the core single-monomial integral: mu for
///   integral of tau^N (tau - 1)^(h+m) (conj(tau) - 1)^k dtau  over |tau| = 1,
/// namely (-1)^(h+k+m+N+1) * C(h+k+m, k-N-1), zero unless k > N.
/// Derivation: (conj(tau)-1)^k = (-1)^k (tau-1)^k tau^-k on the circle, so mu
/// is (-1)^k times the coefficient of tau^(k-N-1) in (tau-1)^(h+k+m).
Rational monomial_moment(unsigned h, unsigned k, unsigned m, unsigned N);

/// The same value computed by brute-force expansion through circ_reduce and
/// residue; second, independent route used by the identity-table demo.
Rational monomial_moment_by_residue(unsigned h, unsigned k, unsigned m, unsigned N);

/// (1 + alpha*abar)^L * mu(a, N) as an exact ParamPoly, L = weighted_degree(f).
/// Evaluating at concrete a and dividing by (1 + |a|^2)^L reproduces moment().
ParamPoly moment_symbolic(const BPoly2& f, unsigned N);
ParamPoly moment_symbolic(const SymbolicPullback& pb, unsigned N);

/// Maximum of k + p over stored monomials (0 for the zero polynomial): the
/// largest N for which any moment can survive is this minus one, because a
/// monomial's pullback has no tau power below -(k+p).
unsigned antiholomorphic_span(const BPoly2& f);

/// True iff G(a, N) = 0 for every disc parameter and every N >= 0, decided in
/// finite time: the symbolic moments for N in [0, antiholomorphic_span) are
/// tested for identical vanishing; larger N vanish structurally. Requires
/// normal form.
bool moments_vanish(const BPoly2& f);

}  // namespace holoext
