#pragma once

#include <holoext/quadrature.hpp>
#include <holoext/slicing.hpp>

#include <optional>
#include <string>
#include <vector>

namespace holoext {

// JSON report assembly. Schema: {schema_version, status, witness?, extension?,
// numeric?}; exact values serialize as strings ("-3/4", "1/2+2/3i"), never as
// floats. Reports are byte-stable under parse + re-serialize.

inline constexpr int kReportSchemaVersion = 1;

std::string certificate_report(const Certificate& cert);

/// Extends the certificate report with a numeric section (float values and
/// node counts from the quadrature cross-check).
std::string quad_report(const std::complex<double>& a, unsigned N,
                        std::complex<double> value, unsigned nodes,
                        std::optional<GaussRational> exact);

struct MomentSweepRow {
    unsigned N;
    ParamPoly cleared_moment;
};
std::string moment_report(const GaussRational& a, unsigned N, const GaussRational& mu);
std::string moment_sweep_report(const std::vector<MomentSweepRow>& rows, unsigned cleared_power,
                                bool vanish);

std::string slice_family_report(const SliceFamilyReport& rep,
                                const std::vector<SlicePlane>& planes);
std::string ncertificate_report(const NCertificate& cert);

std::string interior_center_report(const InteriorCenterReport& rep, unsigned nodes);

/// Plain-text table of the closed-form single-monomial moment against the
/// brute-force residue route, for all h, k, m, N up to the bound.
std::string binomial_identity_table(unsigned max_exponent);

/// Parse + re-serialize; byte-identical for documents this engine emits.
std::string reserialize_report(const std::string& json_text);

}  // namespace holoext
