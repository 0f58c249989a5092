// Command-line front end: parse boundary polynomials, run certifications,
// moments, slices and demos; emit human-readable and JSON reports.
//
// Exit codes: 0 a verdict was produced (an obstruction is a verdict, not an
// error), 1 usage or parse error, 2 internal invariant violation.

#include <holoext/errors.hpp>
#include <holoext/moment.hpp>
#include <holoext/parse.hpp>
#include <holoext/quadrature.hpp>
#include <holoext/report.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace holoext;

unsigned env_default_nodes() {
    if (const char* env = std::getenv("HOLOEXT_NODES")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 257;
}

// Expressions come from -e or, when the flag is absent, from stdin.
std::string expr_or_stdin(const std::string& expr) {
    if (!expr.empty()) return expr;
    std::string text, line;
    while (std::getline(std::cin, line)) text += line + " ";
    if (text.empty()) throw CLI::ValidationError("no expression given (use -e or stdin)");
    return text;
}

void guard_degree(unsigned degree, unsigned max_degree) {
    if (degree > max_degree)
        throw CLI::ValidationError("input weighted degree " + std::to_string(degree) +
                                   " exceeds --max-degree " + std::to_string(max_degree));
}

std::string human_witness(const Obstruction& w) {
    std::ostringstream os;
    os << "l_o=" << w.l_o << " k_o=" << w.k_o << " N=" << w.N << " frequency=" << w.frequency
       << " coefficient=" << to_string(w.coefficient);
    return os.str();
}

void print_certificate(const Certificate& cert, bool json) {
    if (json) {
        std::cout << certificate_report(cert);
        return;
    }
    if (cert.extends())
        std::cout << "status: extends\nextension: " << to_string(cert.extension) << "\n";
    else
        std::cout << "status: obstructed\nwitness: " << human_witness(*cert.witness) << "\n";
}

struct CheckOptions {
    std::string expr;
    unsigned dim = 2;
    unsigned max_degree = 32;
    bool json = false;
};

int run_check(const CheckOptions& opt) {
    if (opt.dim == 2) {
        BPoly2 f = parse_poly2(expr_or_stdin(opt.expr));
        if (!f.is_zero()) guard_degree(weighted_degree(f), opt.max_degree);
        print_certificate(certify(f), opt.json);
        return 0;
    }
    BPolyN F = parse_polyn(expr_or_stdin(opt.expr), opt.dim);
    if (!F.is_zero()) guard_degree(weighted_degree(F), opt.max_degree);
    NCertificate cert = certify_nd(F);
    if (opt.json) {
        std::cout << ncertificate_report(cert);
    } else {
        std::cout << "status: " << (cert.extends ? "extends" : "obstructed") << "\n";
        if (cert.extends)
            std::cout << "extension: " << to_string(cert.extension) << "\n";
        else if (cert.slice_witness && cert.slice_witness->witness)
            std::cout << "slice witness: " << human_witness(*cert.slice_witness->witness) << "\n";
        std::cout << "cross_check_agrees: " << (cert.cross_check_agrees ? "true" : "false")
                  << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"holoext: exact certification of holomorphic extendability of "
                 "polynomial boundary data on the sphere"};
    app.require_subcommand(1);

    // check ------------------------------------------------------------------
    CheckOptions check_opt;
    auto* check = app.add_subcommand("check", "certify extendability of boundary data");
    check->add_option("-e,--expr", check_opt.expr, "boundary polynomial (stdin if absent)");
    check->add_option("-n,--dim", check_opt.dim, "ambient complex dimension")
        ->check(CLI::Range(2u, 16u));
    check->add_option("--max-degree", check_opt.max_degree, "weighted degree guard");
    check->add_flag("--json", check_opt.json, "emit a JSON report");

    // moment -----------------------------------------------------------------
    std::string m_expr, m_a = "1";
    unsigned m_N = 0, m_max_degree = 32;
    bool m_json = false;
    auto* mom = app.add_subcommand("moment", "exact disc moment mu (G = 2*pi*i*mu)");
    mom->add_option("-e,--expr", m_expr, "boundary polynomial, dim 2 (stdin if absent)");
    mom->add_option("-a", m_a, "disc parameter, a Gaussian rational like \"1+0i\"");
    mom->add_option("-N", m_N, "moment index");
    mom->add_option("--max-degree", m_max_degree, "weighted degree guard");
    mom->add_flag("--json", m_json);

    // moments ----------------------------------------------------------------
    std::string ms_expr;
    unsigned ms_max_degree = 32;
    bool ms_json = false;
    auto* moms = app.add_subcommand("moments", "symbolic N-sweep of cleared moments");
    moms->add_option("-e,--expr", ms_expr, "boundary polynomial, dim 2 (stdin if absent)");
    moms->add_option("--max-degree", ms_max_degree, "weighted degree guard");
    moms->add_flag("--json", ms_json);

    // slice ------------------------------------------------------------------
    std::string s_expr;
    unsigned s_dim = 3, s_count = 12, s_max_degree = 32;
    std::vector<std::string> s_planes;
    bool s_json = false;
    auto* slice = app.add_subcommand("slice", "certify along 2-plane slices through 0 and z_o");
    slice->add_option("-e,--expr", s_expr, "boundary polynomial (stdin if absent)");
    slice->add_option("-n,--dim", s_dim, "ambient complex dimension")->check(CLI::Range(3u, 16u));
    slice->add_option("--plane", s_planes,
                      "plane vector as comma-separated Gaussian rationals (repeatable)");
    slice->add_option("--count", s_count, "size of the auto-sampled plane family");
    slice->add_option("--max-degree", s_max_degree, "weighted degree guard");
    slice->add_flag("--json", s_json);

    // quad -------------------------------------------------------------------
    std::string q_expr, q_a = "1";
    unsigned q_N = 0, q_nodes = env_default_nodes(), q_max_degree = 32;
    bool q_json = false;
    auto* quad = app.add_subcommand("quad", "numeric trapezoid cross-check of a moment");
    quad->add_option("-e,--expr", q_expr, "boundary polynomial, dim 2 (stdin if absent)");
    quad->add_option("-a", q_a, "disc parameter (Gaussian rational)");
    quad->add_option("-N", q_N, "moment index");
    quad->add_option("--nodes", q_nodes, "quadrature nodes (default $HOLOEXT_NODES or 257)");
    quad->add_option("--max-degree", q_max_degree, "weighted degree guard");
    quad->add_flag("--json", q_json);

    // demo -------------------------------------------------------------------
    auto* demo = app.add_subcommand("demo", "built-in demonstrations");
    unsigned d_lines = 20, d_nodes = env_default_nodes(), d_max = 3;
    bool d_json = false;
    auto* d_center = demo->add_subcommand(
        "interior-center", "lines through an interior point miss the obstruction");
    d_center->add_option("--lines", d_lines, "number of lines through the origin");
    d_center->add_option("--nodes", d_nodes, "quadrature nodes");
    d_center->add_flag("--json", d_json);
    auto* d_table = demo->add_subcommand(
        "binomial-identity-table", "closed-form monomial moment against the residue route");
    d_table->add_option("--max", d_max, "exponent bound for h, k, m, N");
    demo->require_subcommand(1);

    try {
        app.parse(argc, argv);

        if (*check) return run_check(check_opt);

        if (*mom) {
            BPoly2 f = parse_poly2(expr_or_stdin(m_expr));
            if (!f.is_zero()) guard_degree(weighted_degree(f), m_max_degree);
            GaussRational a = parse_gaussian(m_a);
            GaussRational mu = moment(f, a, m_N);
            if (m_json)
                std::cout << moment_report(a, m_N, mu);
            else
                std::cout << "mu = " << to_string(mu) << "\n";
            return 0;
        }

        if (*moms) {
            BPoly2 f = normal_form(parse_poly2(expr_or_stdin(ms_expr)));
            if (!f.is_zero()) guard_degree(weighted_degree(f), ms_max_degree);
            SymbolicPullback pb = disc_pullback_symbolic(f);
            unsigned span = antiholomorphic_span(f);
            std::vector<MomentSweepRow> rows;
            for (unsigned N = 0; N < span; ++N) rows.push_back({N, moment_symbolic(pb, N)});
            bool vanish = moments_vanish(f);
            if (ms_json) {
                std::cout << moment_sweep_report(rows, pb.cleared_power, vanish);
            } else {
                for (const auto& row : rows)
                    std::cout << "N=" << row.N << ": " << to_string(row.cleared_moment) << "\n";
                std::cout << "all moments vanish: " << (vanish ? "yes" : "no") << "\n";
            }
            return 0;
        }

        if (*slice) {
            BPolyN F = parse_polyn(expr_or_stdin(s_expr), s_dim);
            if (!F.is_zero()) guard_degree(weighted_degree(F), s_max_degree);
            std::vector<SlicePlane> planes;
            if (s_planes.empty()) {
                planes = default_planes(s_dim, s_count);
            } else {
                for (const auto& text : s_planes) {
                    SlicePlane plane;
                    std::stringstream ss{text};
                    std::string entry;
                    while (std::getline(ss, entry, ',')) plane.v.push_back(parse_gaussian(entry));
                    planes.push_back(std::move(plane));
                }
            }
            SliceFamilyReport rep = slice_certify_all(F, planes);
            if (s_json) {
                std::cout << slice_family_report(rep, planes);
            } else {
                for (std::size_t i = 0; i < rep.slices.size(); ++i)
                    std::cout << "plane " << i << ": "
                              << (rep.slices[i].certificate.extends() ? "extends" : "obstructed")
                              << "\n";
                std::cout << "all extend: " << (rep.all_extend ? "yes" : "no")
                          << ", gluing: " << (rep.glue_ok ? "consistent" : "n/a") << "\n";
            }
            return 0;
        }

        if (*quad) {
            BPoly2 f = parse_poly2(expr_or_stdin(q_expr));
            if (!f.is_zero()) guard_degree(weighted_degree(f), q_max_degree);
            GaussRational a = parse_gaussian(q_a);
            QuadConfig cfg{q_nodes, 1e-10};
            std::complex<double> value = moment_quad(f, to_complex(a), q_N, cfg);
            GaussRational exact = moment(f, a, q_N);
            if (q_json) {
                std::cout << quad_report(to_complex(a), q_N, value, q_nodes, exact);
            } else {
                std::cout << "mu ~ " << value.real() << (value.imag() < 0 ? " - " : " + ")
                          << std::abs(value.imag()) << "i   (exact " << to_string(exact) << ")\n";
            }
            return 0;
        }

        if (*d_center) {
            QuadConfig cfg{d_nodes, 1e-10};
            InteriorCenterReport rep = interior_center_demo(d_lines, cfg);
            if (d_json) {
                std::cout << interior_center_report(rep, d_nodes);
            } else {
                std::cout << "f = |z1|^2 restricted to lines through the origin:\n";
                for (const auto& line : rep.lines)
                    std::cout << "  v = (" << to_string(line.v1) << ", " << to_string(line.v2)
                              << "): constant boundary value, residual " << line.neg_residual
                              << "\n";
                std::cout << "every line extends (worst residual " << rep.worst_residual
                          << "),\nbut the disc family through the boundary point certifies:\n";
                std::cout << "  mu(a=1, N=0) = " << to_string(rep.unit_disc_moment)
                          << ", witness: " << human_witness(*rep.center_certificate.witness)
                          << "\n";
            }
            return 0;
        }

        if (*d_table) {
            std::cout << binomial_identity_table(d_max);
            return 0;
        }

        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
