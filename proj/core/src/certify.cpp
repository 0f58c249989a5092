#include <holoext/certify.hpp>

#include <holoext/errors.hpp>

#include <limits>
#include <stdexcept>

namespace holoext {

namespace {

bool z2bar_free(const BPoly2& f) {
    for (const auto& [mo, c] : f.coeffs())
        if (mo.p > 0) return false;
    return true;
}

}  // namespace

BPoly2 expand_at_base(const BPoly2& f) {
    if (!z2bar_free(f)) throw std::invalid_argument("expand_at_base requires ~z2-free input");
    BPoly2 out;
    for (const auto& [mo, b] : f.coeffs())
        for (unsigned j = 0; j <= mo.m; ++j)
            out.add_term({mo.h, mo.k, j, 0},
                         b * GaussRational(Rational(binomial(mo.m, j))));
    return out;
}

std::pair<unsigned, LeadingAsymptotic> leading_asymptotic(const BPoly2& f, unsigned N) {
    BPoly2 taylor = expand_at_base(f);

    unsigned l_o = std::numeric_limits<unsigned>::max();
    for (const auto& [mo, b] : taylor.coeffs())
        if (mo.k > N) l_o = std::min(l_o, mo.weighted_degree());
    if (l_o == std::numeric_limits<unsigned>::max())
        throw std::invalid_argument("no antiholomorphic content above N");

    LeadingAsymptotic modes;
    for (const auto& [mo, b] : taylor.coeffs()) {
        if (mo.k <= N || mo.weighted_degree() != l_o) continue;
        int freq = static_cast<int>(mo.h) - static_cast<int>(mo.k);
        GaussRational contrib = b * GaussRational(monomial_moment(mo.h, mo.k, mo.m, N));
        auto [it, inserted] = modes.emplace(freq, contrib);
        if (!inserted) {
            it->second += contrib;
            if (it->second.is_zero()) modes.erase(it);
        }
    }
    return {l_o, modes};
}

Certificate cascade(const BPoly2& f, bool assume_moments_vanish,
                    std::vector<CascadeStep>* replay) {
    if (!is_normal_form(f)) throw std::invalid_argument("input is not in normal form");
    if (!z2bar_free(f)) throw std::invalid_argument("cascade requires ~z2-free input");
    if (replay) replay->clear();

    BPoly2 taylor = expand_at_base(f);

    auto pick_stratum = [](const BPoly2& g) -> std::optional<std::pair<unsigned, unsigned>> {
        unsigned l_o = std::numeric_limits<unsigned>::max();
        for (const auto& [mo, b] : g.coeffs())
            if (mo.k > 0) l_o = std::min(l_o, mo.weighted_degree());
        if (l_o == std::numeric_limits<unsigned>::max()) return std::nullopt;
        unsigned k_o = 0;
        for (const auto& [mo, b] : g.coeffs())
            if (mo.k > 0 && mo.weighted_degree() == l_o) k_o = std::max(k_o, mo.k);
        return std::make_pair(l_o, k_o);
    };

    if (assume_moments_vanish) {
        // Replay of the proof: each stratum's coefficients are forced to zero
        // by the vanishing moments, so remove it and recurse.
        while (auto stratum = pick_stratum(taylor)) {
            auto [l_o, k_o] = *stratum;
            BPoly2 rest;
            unsigned cleared = 0;
            for (const auto& [mo, b] : taylor.coeffs()) {
                if (mo.k == k_o && mo.weighted_degree() == l_o)
                    ++cleared;
                else
                    rest.add_term(mo, b);
            }
            if (replay) replay->push_back({l_o, k_o, cleared});
            taylor = std::move(rest);
        }
        return {Certificate::Status::Extends, holomorphic_part(f), std::nullopt};
    }

    auto stratum = pick_stratum(taylor);
    if (!stratum) return {Certificate::Status::Extends, f, std::nullopt};

    auto [l_o, k_o] = *stratum;
    unsigned N = k_o - 1;
    auto [level, modes] = leading_asymptotic(f, N);
    if (level != l_o) throw internal_error("leading level does not match the chosen stratum");

    // At N = k_o - 1 only conjugate order k_o survives at the leading level,
    // the frequency h - k_o is injective in h there (m is determined by the
    // level), and the single-monomial moment never vanishes in that range; a
    // nonzero mode therefore always exists.
    for (const auto& [freq, coeff] : modes)
        if (!coeff.is_zero())
            return {Certificate::Status::Obstructed, {},
                    Obstruction{l_o, k_o, N, freq, coeff}};
    throw internal_error("cascade found no nonzero leading mode");
}

Certificate certify(const BPoly2& f) {
    BPoly2 g = normal_form(f);
    if (moments_vanish(g)) {
        if (!is_holomorphic(g))
            throw internal_error("vanishing moments for non-holomorphic normal form");
        return {Certificate::Status::Extends, holomorphic_part(g), std::nullopt};
    }
    if (z2bar_free(g)) {
        Certificate cert = cascade(g, false);
        if (cert.extends()) throw internal_error("cascade disagrees with nonzero moments");
        return cert;
    }

    // Conjugate-z2 content: report the leading mode of the first nonzero
    // symbolic moment. The top t-grade r of the cleared moment under
    // a -> t e^(i theta) corresponds to decay level l_o = 2L - r.
    SymbolicPullback pb = disc_pullback_symbolic(g);
    unsigned span = antiholomorphic_span(g);
    for (unsigned N = 0; N < span; ++N) {
        ParamPoly ms = moment_symbolic(pb, N);
        if (param_is_zero(ms)) continue;
        unsigned top = 0;
        for (const auto& [key, c] : ms.terms()) top = std::max(top, key.first + key.second);
        std::optional<int> freq;
        GaussRational coeff;
        for (const auto& [key, c] : ms.terms()) {
            if (key.first + key.second != top) continue;
            int d = static_cast<int>(key.first) - static_cast<int>(key.second);
            if (!freq || d < *freq) {
                freq = d;
                coeff = c;
            }
        }
        unsigned l_o = 2 * pb.cleared_power - top;
        return {Certificate::Status::Obstructed, {},
                Obstruction{l_o, N + 1, N, *freq, coeff}};
    }
    throw internal_error("nonzero moments but no witness found");
}

bool verify_obstruction(const BPoly2& f, const Obstruction& w) {
    BPoly2 g = normal_form(f);
    if (g.is_zero()) return false;
    unsigned L = weighted_degree(g);
    ParamPoly ms = moment_symbolic(g, w.N);
    if (param_is_zero(ms)) return false;

    // Under a -> t e^(i theta) a term (p, q) becomes t^(p+q) e^(i theta (p-q)).
    unsigned top = 0;
    for (const auto& [key, c] : ms.terms()) top = std::max(top, key.first + key.second);
    if (top != 2 * L - w.l_o) return false;

    GaussRational mode;
    for (const auto& [key, c] : ms.terms())
        if (key.first + key.second == top &&
            static_cast<int>(key.first) - static_cast<int>(key.second) == w.frequency)
            mode += c;
    return !mode.is_zero() && mode == w.coefficient;
}

}  // namespace holoext
