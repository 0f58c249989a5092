#include <holoext/laurent.hpp>

#include <sstream>

namespace holoext {

LaurentPoly circ_reduce(const std::vector<CircTerm>& terms) {
    LaurentPoly p;
    for (const auto& t : terms) p.add_term(t.tau_exp - t.taubar_exp, t.coeff);
    return p;
}

GaussRational residue(const LaurentPoly& p) { return p.coeff(-1); }

GaussRational eval_at(const LaurentPoly& p, const GaussRational& tau) {
    if (tau.is_zero() && !p.is_zero() && p.min_exp() < 0)
        throw std::domain_error("Laurent evaluation at zero");
    GaussRational acc;
    GaussRational inv = p.min_exp() < 0 ? GaussRational(1) / tau : GaussRational(1);
    for (const auto& [e, c] : p.terms()) {
        GaussRational power = e >= 0 ? tau.pow(static_cast<unsigned>(e))
                                     : inv.pow(static_cast<unsigned>(-e));
        acc += c * power;
    }
    return acc;
}

std::string to_string(const GaussRational& z) {
    if (z.im == 0) return to_string(z.re);
    std::ostringstream os;
    os << z.re << (z.im < 0 ? "-" : "+");
    Rational a = z.im < 0 ? Rational(-z.im) : z.im;
    os << a << "i";
    return os.str();
}

}  // namespace holoext
