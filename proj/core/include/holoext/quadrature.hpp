#pragma once

#include <holoext/certify.hpp>

#include <complex>
#include <vector>

namespace holoext {

/// Equispaced trapezoid rule on the circle. The integrands are trigonometric
/// polynomials, so once nodes exceeds the bandwidth the rule is exact up to
/// rounding; no adaptive quadrature is needed.
struct QuadConfig {
    unsigned nodes = 257;
    double tolerance = 1e-10;
};

std::complex<double> to_complex(const GaussRational& z);

/// Floating-point evaluation of boundary data at a point of C^2.
std::complex<double> eval_f(const BPoly2& f, std::complex<double> z1, std::complex<double> z2);

/// Trapezoid approximation of (1/(2*pi*i)) * integral of tau^N f(D_a(tau)).
/// Requires nodes >= 2*(weighted_degree(f) + N) + 3; throws
/// std::invalid_argument("insufficient nodes") otherwise.
std::complex<double> moment_quad(const BPoly2& f, std::complex<double> a, unsigned N,
                                 const QuadConfig& cfg);

/// Fourier coefficients of theta -> f(D_a(e^(i*theta))); returns the largest
/// magnitude among negative frequencies. Near zero iff f extends along D_a.
double disc_fourier_test(const BPoly2& f, std::complex<double> a, const QuadConfig& cfg);

/// Demonstration that an interior center does not see the obstruction:
/// for f = |z1|^2 the restriction to every complex line through the origin is
/// the constant |v1|^2 (extends; negative Fourier modes vanish), while the
/// disc family through the boundary point certifies an obstruction.
struct InteriorCenterReport {
    struct Line {
        Rational v1, v2;        // real direction with v1^2 + v2^2 = 1
        double neg_residual;    // max |c_-j| of the boundary restriction
    };
    std::vector<Line> lines;
    double worst_residual = 0.0;
    GaussRational unit_disc_moment;  // exact mu(f, a = 1, N = 0)
    Certificate center_certificate;  // obstructed
};

InteriorCenterReport interior_center_demo(unsigned line_count = 20, const QuadConfig& cfg = {});

}  // namespace holoext
