#pragma once

// Shared test utilities: deterministic generators for exact values and the
// independent oracles the suites check the engine against. The oracles here
// are deliberately written from scratch (plain binomial sums and pointwise
// sampling) and do not reuse the code paths they validate.

#include <holoext/boundary.hpp>
#include <holoext/parampoly.hpp>
#include <holoext/points.hpp>
#include <holoext/slicing.hpp>

#include <random>
#include <vector>

namespace holoext::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline Rational random_rational(std::mt19937_64& g, int max_abs = 9) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, max_abs);
    return Rational(num(g), den(g));
}

inline GaussRational random_gauss(std::mt19937_64& g, int max_abs = 9) {
    return {random_rational(g, max_abs), random_rational(g, max_abs)};
}

inline GaussRational random_nonzero_gauss(std::mt19937_64& g, int max_abs = 9) {
    for (;;) {
        GaussRational z = random_gauss(g, max_abs);
        if (!z.is_zero()) return z;
    }
}

/// All normal-form monomials (min(m, p) = 0) of weighted degree <= bound.
inline std::vector<Mono2> normal_monomials(unsigned bound) {
    std::vector<Mono2> out;
    for (unsigned h = 0; h <= bound; ++h)
        for (unsigned k = 0; h + k <= bound; ++k)
            for (unsigned m = 0; h + k + 2 * m <= bound; ++m)
                for (unsigned p = 0; h + k + 2 * m + 2 * p <= bound; ++p)
                    if (m == 0 || p == 0) out.push_back({h, k, m, p});
    return out;
}

/// Random normal-form polynomial of weighted degree <= bound.
inline BPoly2 random_normal_poly(std::mt19937_64& g, unsigned bound, unsigned max_terms = 6) {
    auto basis = normal_monomials(bound);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    BPoly2 f;
    unsigned n = nterms(g);
    for (unsigned j = 0; j < n; ++j) f.add_term(basis[pick(g)], random_nonzero_gauss(g, 4));
    return f;
}

/// All normal-form n-variable monomials of weighted degree <= bound.
inline std::vector<MonoN> normal_monomials_nd(unsigned n, unsigned bound) {
    std::vector<MonoN> out;
    MonoN mo;
    mo.mu.assign(n, 0);
    mo.nu.assign(n, 0);
    // Depth-first over the 2n exponent slots.
    auto weight = [n](unsigned slot) { return (slot % n) + 1 == n ? 2u : 1u; };
    auto rec = [&](auto&& self, unsigned slot, unsigned used) -> void {
        if (slot == 2 * n) {
            if (mo.mu[n - 1] == 0 || mo.nu[n - 1] == 0) out.push_back(mo);
            return;
        }
        unsigned& e = slot < n ? mo.mu[slot] : mo.nu[slot - n];
        for (unsigned v = 0; used + v * weight(slot) <= bound; ++v) {
            e = v;
            self(self, slot + 1, used + v * weight(slot));
        }
        e = 0;
    };
    rec(rec, 0, 0);
    return out;
}

/// Independent residue oracle: mu of the core integral
///   integral over |tau|=1 of tau^N (tau-1)^(h+m) (conj(tau)-1)^k dtau
/// by direct binomial expansion. (tau-1)^(h+m) spreads over tau^i and
/// (conj(tau)-1)^k over tau^(-j); the residue collects N + i - j = -1.
inline Rational oracle_monomial_moment(unsigned h, unsigned k, unsigned m, unsigned N) {
    const long H = static_cast<long>(h + m);
    Int total = 0;
    for (long i = 0; i <= H; ++i)
        for (long j = 0; j <= static_cast<long>(k); ++j) {
            if (static_cast<long>(N) + i - j != -1) continue;
            Int c = binomial(H, i) * binomial(k, j);
            if ((H - i + k - j) % 2 != 0) c = -c;
            total += c;
        }
    return Rational(total);
}

/// Sampling oracle for formal vanishing: evaluates q on an integer grid of
/// (Re a, Im a) values strictly larger than the degree in each variable. A
/// nonzero polynomial cannot vanish on the whole grid.
inline bool oracle_vanishes_by_sampling(const ParamPoly& q) {
    unsigned deg = 0;
    for (const auto& [key, c] : q.terms()) deg = std::max({deg, key.first, key.second});
    const long side = static_cast<long>(2 * deg) + 2;
    for (long x = 0; x < side; ++x)
        for (long y = 0; y < side; ++y)
            if (!q.eval(GaussRational(Rational(x), Rational(y))).is_zero()) return false;
    return true;
}

}  // namespace holoext::testing
