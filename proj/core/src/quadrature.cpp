#include <holoext/quadrature.hpp>

#include <holoext/points.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace holoext {

std::complex<double> to_complex(const GaussRational& z) {
    return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

std::complex<double> eval_f(const BPoly2& f, std::complex<double> z1, std::complex<double> z2) {
    std::complex<double> acc = 0.0;
    for (const auto& [mo, c] : f.coeffs()) {
        std::complex<double> term = to_complex(c);
        term *= std::pow(z1, static_cast<int>(mo.h)) * std::pow(std::conj(z1), static_cast<int>(mo.k));
        term *= std::pow(z2, static_cast<int>(mo.m)) * std::pow(std::conj(z2), static_cast<int>(mo.p));
        acc += term;
    }
    return acc;
}

namespace {

std::complex<double> disc_point_z1(std::complex<double> a, std::complex<double> tau) {
    double s = 1.0 + std::norm(a);
    return (tau - 1.0) / s * a;
}

std::complex<double> disc_point_z2(std::complex<double> a, std::complex<double> tau) {
    double s = 1.0 + std::norm(a);
    return (tau - 1.0) / s + 1.0;
}

void require_nodes(const BPoly2& f, unsigned N, const QuadConfig& cfg) {
    unsigned wd = f.is_zero() ? 0 : weighted_degree(f);
    if (cfg.nodes < 2 * (wd + N) + 3) throw std::invalid_argument("insufficient nodes");
}

}  // namespace

std::complex<double> moment_quad(const BPoly2& f, std::complex<double> a, unsigned N,
                                 const QuadConfig& cfg) {
    require_nodes(f, N, cfg);
    // (1/(2 pi i)) * integral of tau^N f dtau = (1/(2 pi)) * integral of tau^(N+1) f dtheta.
    std::complex<double> acc = 0.0;
    for (unsigned j = 0; j < cfg.nodes; ++j) {
        double theta = 2.0 * std::numbers::pi * j / cfg.nodes;
        std::complex<double> tau{std::cos(theta), std::sin(theta)};
        acc += std::pow(tau, static_cast<int>(N) + 1) *
               eval_f(f, disc_point_z1(a, tau), disc_point_z2(a, tau));
    }
    return acc / static_cast<double>(cfg.nodes);
}

double disc_fourier_test(const BPoly2& f, std::complex<double> a, const QuadConfig& cfg) {
    require_nodes(f, 0, cfg);
    unsigned wd = f.is_zero() ? 0 : weighted_degree(f);

    std::vector<std::complex<double>> samples(cfg.nodes);
    for (unsigned j = 0; j < cfg.nodes; ++j) {
        double theta = 2.0 * std::numbers::pi * j / cfg.nodes;
        std::complex<double> tau{std::cos(theta), std::sin(theta)};
        samples[j] = eval_f(f, disc_point_z1(a, tau), disc_point_z2(a, tau));
    }

    // Direct summation; node counts are tiny at desk scale.
    double worst = 0.0;
    for (unsigned freq = 1; freq <= wd; ++freq) {
        std::complex<double> c = 0.0;
        for (unsigned j = 0; j < cfg.nodes; ++j) {
            double theta = 2.0 * std::numbers::pi * j / cfg.nodes;
            c += samples[j] * std::complex<double>{std::cos(freq * theta), std::sin(freq * theta)};
        }
        worst = std::max(worst, std::abs(c) / cfg.nodes);
    }
    return worst;
}

InteriorCenterReport interior_center_demo(unsigned line_count, const QuadConfig& cfg) {
    BPoly2 f = BPoly2::monomial({1, 1, 0, 0}, GaussRational(1));  // |z1|^2

    InteriorCenterReport rep;
    for (unsigned j = 0; j < line_count; ++j) {
        auto [r1, r2] = pythagorean_pair(Rational(j, line_count + 1));
        std::complex<double> v1(static_cast<double>(r1), 0.0);
        std::complex<double> v2(static_cast<double>(r2), 0.0);

        // Boundary restriction along the line: theta -> f(e^(i theta) v).
        double worst = 0.0;
        for (unsigned freq = 1; freq <= 2; ++freq) {
            std::complex<double> c = 0.0;
            for (unsigned n = 0; n < cfg.nodes; ++n) {
                double theta = 2.0 * std::numbers::pi * n / cfg.nodes;
                std::complex<double> w{std::cos(theta), std::sin(theta)};
                c += eval_f(f, w * v1, w * v2) *
                     std::complex<double>{std::cos(freq * theta), std::sin(freq * theta)};
            }
            worst = std::max(worst, std::abs(c) / cfg.nodes);
        }
        rep.lines.push_back({r1, r2, worst});
        rep.worst_residual = std::max(rep.worst_residual, worst);
    }

    rep.unit_disc_moment = moment(f, GaussRational(1), 0);
    rep.center_certificate = certify(f);
    return rep;
}

}  // namespace holoext
