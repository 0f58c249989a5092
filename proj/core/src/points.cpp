#include <holoext/points.hpp>

namespace holoext {

GaussRational circle_point(const Rational& t) {
    Rational d = 1 + t * t;
    return {(1 - t * t) / d, 2 * t / d};
}

std::pair<Rational, Rational> pythagorean_pair(const Rational& u) {
    Rational d = 1 + u * u;
    return {(1 - u * u) / d, 2 * u / d};
}

std::pair<GaussRational, GaussRational> sphere_point(const Rational& t1, const Rational& t2,
                                                     const Rational& u) {
    auto [r1, r2] = pythagorean_pair(u);
    GaussRational z1 = circle_point(t1) * GaussRational(r1);
    GaussRational z2 = circle_point(t2) * GaussRational(r2);
    return {z1, z2};
}

std::vector<std::pair<GaussRational, GaussRational>> sphere_points(std::size_t count) {
    std::vector<std::pair<GaussRational, GaussRational>> pts;
    pts.reserve(count);
    // The three parameters must not be tied to a single index: points on a
    // low-height curve make bounded-degree monomials collapse. A fixed LCG
    // decouples them while keeping the list deterministic.
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&state](long lo, long hi) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<long>((state >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
    };
    while (pts.size() < count) {
        Rational t1(next(-9, 9), next(1, 9));
        Rational t2(next(-9, 9), next(1, 9));
        Rational u(next(1, 9), next(10, 19));  // keeps both moduli nonzero
        auto pt = sphere_point(t1, t2, u);
        bool seen = false;
        for (const auto& q : pts) seen = seen || q == pt;
        if (!seen) pts.push_back(pt);
    }
    return pts;
}

std::vector<GaussRational> circle_points(std::size_t count) {
    std::vector<GaussRational> pts;
    pts.reserve(count);
    for (long j = 0; pts.size() < count; ++j) pts.push_back(circle_point(Rational(j, j + 1)));
    return pts;
}

}  // namespace holoext
