#pragma once

#include <holoext/moment.hpp>

#include <map>
#include <optional>
#include <vector>

namespace holoext {

/// Witness that some disc moment is nonzero. l_o is the weighted degree of
/// the surviving leading term under the scaling a -> t*e^(i*theta): writing
/// L = weighted_degree(f), the cleared symbolic moment at N has top t-grade
/// exactly 2L - l_o, and its e^(i*theta*frequency) mode there equals
/// coefficient (nonzero). Always N = k_o - 1.
struct Obstruction {
    unsigned l_o = 0;
    unsigned k_o = 0;
    unsigned N = 0;
    int frequency = 0;
    GaussRational coefficient;

    friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

/// Extension certificate or obstruction witness. When extends() the extension
/// is holomorphic and agrees with the input at every point of the sphere.
struct Certificate {
    enum class Status { Extends, Obstructed };

    Status status = Status::Extends;
    BPoly2 extension;                   // set when Extends
    std::optional<Obstruction> witness; // set when Obstructed

    bool extends() const { return status == Status::Extends; }

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// One step of the coefficient-killing replay: at level l_o all coefficients
/// of conjugate order k_o are forced to zero ('cleared' of them removed).
struct CascadeStep {
    unsigned l_o = 0;
    unsigned k_o = 0;
    unsigned cleared = 0;
};

/// Taylor coefficients of f at the base point (0, 1): the same container with
/// m re-read as the power of (z2 - 1). The change of basis is triangular in
/// the weighted degree with unit diagonal, and it is what makes the large-|a|
/// decay of a monomial's moment match its weighted degree exactly.
/// Requires p = 0 throughout.
BPoly2 expand_at_base(const BPoly2& f);

/// Modes of lim t^l_o * G(t*e^(i*theta)*a, N) / (2*pi*i) as a finite
/// trigonometric polynomial in theta, stored exactly by frequency.
using LeadingAsymptotic = std::map<int, GaussRational>;

/// l_o is the lowest weighted degree of the Taylor expansion at the base
/// point carrying a monomial with k > N; each such monomial (h, k, m) at that
/// level contributes its coefficient times monomial_moment(h, k, m, N) to the
/// mode at frequency h - k. Requires f free of ~z2; throws
/// std::invalid_argument when no monomial has k > N.
std::pair<unsigned, LeadingAsymptotic> leading_asymptotic(const BPoly2& f, unsigned N);

/// Replays the proof's coefficient-killing cascade. With
/// assume_moments_vanish = false: picks l_o and the highest conjugate order
/// k_o at that level, sets N = k_o - 1, and returns the first nonzero mode of
/// the leading asymptotic as an obstruction (each mode isolates a single
/// coefficient, so one always exists when antiholomorphic content does). With
/// assume_moments_vanish = true: derives that each isolated coefficient is
/// zero, removes the stratum, recurses, and returns the holomorphic part;
/// the optional replay records the elimination order. Requires normal form
/// with p = 0 throughout.
Certificate cascade(const BPoly2& f, bool assume_moments_vanish,
                    std::vector<CascadeStep>* replay = nullptr);

/// Top-level decision: Extends iff every moment vanishes. When Extends the
/// certificate's extension is holomorphic_part(normal_form(f)) and equals f
/// on the sphere. When obstructed, ~z2-free data gets the structured cascade
/// witness; otherwise the witness is the leading mode of the first nonzero
/// symbolic moment.
Certificate certify(const BPoly2& f);

/// Independent check of a witness: re-expands the cleared symbolic moment at
/// w.N under a -> t*e^(i*theta) and tests that the top t-grade is exactly
/// 2L - l_o with the stated mode coefficient there.
bool verify_obstruction(const BPoly2& f, const Obstruction& w);

}  // namespace holoext
