#include <holoext/report.hpp>

#include <holoext/moment.hpp>
#include <holoext/parse.hpp>

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace holoext {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json witness_json(const Obstruction& w) {
    ordered_json j;
    j["l_o"] = w.l_o;
    j["k_o"] = w.k_o;
    j["N"] = w.N;
    j["frequency"] = w.frequency;
    j["coefficient"] = to_string(w.coefficient);
    return j;
}

ordered_json certificate_json(const Certificate& cert) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["status"] = cert.extends() ? "extends" : "obstructed";
    if (cert.extends())
        j["extension"] = to_string(cert.extension);
    else if (cert.witness)
        j["witness"] = witness_json(*cert.witness);
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string certificate_report(const Certificate& cert) { return dump(certificate_json(cert)); }

std::string quad_report(const std::complex<double>& a, unsigned N,
                        std::complex<double> value, unsigned nodes,
                        std::optional<GaussRational> exact) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["status"] = "ok";
    ordered_json num;
    num["nodes"] = nodes;
    num["N"] = N;
    num["a"] = {a.real(), a.imag()};
    num["mu"] = {value.real(), value.imag()};
    if (exact) {
        num["exact_mu"] = to_string(*exact);
        std::complex<double> e = to_complex(*exact);
        num["abs_error"] = std::abs(value - e);
    }
    j["numeric"] = num;
    return dump(j);
}

std::string moment_report(const GaussRational& a, unsigned N, const GaussRational& mu) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["status"] = "ok";
    j["a"] = to_string(a);
    j["N"] = N;
    j["mu"] = to_string(mu);
    return dump(j);
}

std::string moment_sweep_report(const std::vector<MomentSweepRow>& rows, unsigned cleared_power,
                                bool vanish) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["status"] = vanish ? "extends" : "obstructed";
    j["cleared_power"] = cleared_power;
    ordered_json sweep = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json r;
        r["N"] = row.N;
        r["cleared_moment"] = to_string(row.cleared_moment);
        sweep.push_back(r);
    }
    j["moments"] = sweep;
    return dump(j);
}

namespace {

ordered_json plane_json(const SlicePlane& plane) {
    ordered_json v = ordered_json::array();
    for (const auto& c : plane.v) v.push_back(to_string(c));
    return v;
}

// Classical steps that are cited, not re-implemented: for polynomial data the
// global coefficient criterion replaces them.
constexpr const char* kSliceNotes =
    "radial holomorphy (Forelli) and boundary-to-interior propagation (Hartogs) "
    "are classical and replaced by the coefficient criterion for polynomial data";

}  // namespace

std::string slice_family_report(const SliceFamilyReport& rep,
                                const std::vector<SlicePlane>& planes) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["status"] = rep.all_extend ? "extends" : "obstructed";
    j["glue_ok"] = rep.glue_ok;
    ordered_json slices = ordered_json::array();
    for (std::size_t i = 0; i < rep.slices.size(); ++i) {
        ordered_json s;
        s["plane"] = plane_json(planes[i]);
        s["certificate"] = certificate_json(rep.slices[i].certificate);
        slices.push_back(s);
    }
    j["slices"] = slices;
    j["notes"] = kSliceNotes;
    return dump(j);
}

std::string ncertificate_report(const NCertificate& cert) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["status"] = cert.extends ? "extends" : "obstructed";
    if (cert.extends) j["extension"] = to_string(cert.extension);
    if (cert.slice_witness && cert.slice_witness->witness)
        j["witness"] = witness_json(*cert.slice_witness->witness);
    j["cross_check_agrees"] = cert.cross_check_agrees;
    j["notes"] = kSliceNotes;
    return dump(j);
}

std::string interior_center_report(const InteriorCenterReport& rep, unsigned nodes) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["status"] = "ok";
    ordered_json lines = ordered_json::array();
    for (const auto& line : rep.lines) {
        ordered_json l;
        l["v"] = {to_string(line.v1), to_string(line.v2)};
        l["neg_fourier_residual"] = line.neg_residual;
        lines.push_back(l);
    }
    ordered_json num;
    num["nodes"] = nodes;
    num["lines_through_origin"] = lines;
    num["worst_residual"] = rep.worst_residual;
    j["numeric"] = num;
    j["unit_disc_moment"] = to_string(rep.unit_disc_moment);
    j["center_certificate"] = certificate_json(rep.center_certificate);
    return dump(j);
}

std::string binomial_identity_table(unsigned max_exponent) {
    std::ostringstream os;
    os << std::setw(4) << "h" << std::setw(4) << "k" << std::setw(4) << "m" << std::setw(4)
       << "N" << std::setw(16) << "closed-form" << std::setw(16) << "residue" << "\n";
    for (unsigned h = 0; h <= max_exponent; ++h)
        for (unsigned k = 0; k <= max_exponent; ++k)
            for (unsigned m = 0; m <= max_exponent; ++m)
                for (unsigned N = 0; N <= max_exponent; ++N) {
                    Rational closed = monomial_moment(h, k, m, N);
                    Rational brute = monomial_moment_by_residue(h, k, m, N);
                    os << std::setw(4) << h << std::setw(4) << k << std::setw(4) << m
                       << std::setw(4) << N << std::setw(16) << to_string(closed)
                       << std::setw(16) << to_string(brute)
                       << (closed == brute ? "" : "   MISMATCH") << "\n";
                }
    return os.str();
}

std::string reserialize_report(const std::string& json_text) {
    return dump(ordered_json::parse(json_text));
}

}  // namespace holoext
