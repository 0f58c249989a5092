#include <holoext/parse.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace holoext {

namespace {

class Parser {
public:
    Parser(std::string_view text, unsigned dim) : text_(text), dim_(dim) {}

    BPolyN parse() {
        BPolyN out(dim_);
        skip_ws();
        bool negative = accept_sign();
        parse_term(out, negative);
        skip_ws();
        while (!done()) {
            char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            parse_term(out, c == '-');
            skip_ws();
        }
        return out;
    }

    GaussRational parse_single_gaussian() {
        skip_ws();
        GaussRational g = parse_gauss_literal();
        skip_ws();
        if (!done()) fail("trailing input after literal");
        return g;
    }

private:
    std::string_view text_;
    unsigned dim_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool accept_sign() {
        if (peek() == '-') {
            ++pos_;
            skip_ws();
            return true;
        }
        if (peek() == '+') {
            ++pos_;
            skip_ws();
        }
        return false;
    }

    Int parse_digits() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
        Int value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            ++pos_;
        }
        if (peek() == '.' || peek() == 'e' || peek() == 'E')
            fail("non-rational literal (use p/q, floating point is not allowed)");
        return value;
    }

    Rational parse_rat() {
        Int num = parse_digits();
        if (peek() == '/') {
            ++pos_;
            Int den = parse_digits();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    // ['+'|'-'] rat ['i'] [('+'|'-') rat 'i']
    GaussRational parse_gauss_literal() {
        bool neg = accept_sign();
        Rational first = parse_rat();
        if (neg) first = -first;
        if (peek() == 'i') {
            ++pos_;
            return {Rational(0), first};
        }
        if (peek() == '+' || peek() == '-') {
            std::size_t mark = pos_;
            bool neg_im = peek() == '-';
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = mark;  // the sign belongs to the next term
                return {first, Rational(0)};
            }
            Rational im = parse_rat();
            if (peek() != 'i') {
                pos_ = mark;
                return {first, Rational(0)};
            }
            ++pos_;
            return {first, neg_im ? Rational(-im) : im};
        }
        return {first, Rational(0)};
    }

    void parse_term(BPolyN& out, bool negative) {
        skip_ws();
        GaussRational coeff(negative ? -1 : 1);
        std::vector<unsigned> mu(dim_, 0), nu(dim_, 0);
        bool first_factor = true;
        for (;;) {
            skip_ws();
            parse_factor(coeff, mu, nu, first_factor);
            first_factor = false;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        out.add_term({std::move(mu), std::move(nu)}, coeff);
    }

    void parse_factor(GaussRational& coeff, std::vector<unsigned>& mu, std::vector<unsigned>& nu,
                      bool allow_empty_error) {
        char c = peek();
        if (c == '(') {
            ++pos_;
            skip_ws();
            GaussRational g = parse_gauss_literal();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            coeff *= g;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational r = parse_rat();
            if (peek() == 'i') {
                ++pos_;
                coeff *= GaussRational(Rational(0), r);
            } else {
                coeff *= GaussRational(r);
            }
            return;
        }
        if (c == '~' || c == 'z') {
            bool conjugate = c == '~';
            if (conjugate) {
                ++pos_;
                if (peek() != 'z') fail("expected 'z' after '~'");
            }
            ++pos_;
            std::size_t idx_pos = pos_;
            Int idx = parse_digits();
            if (idx < 1 || idx > dim_)
                throw ParseError(idx_pos, "unknown variable index for dimension " +
                                              std::to_string(dim_));
            unsigned i = static_cast<unsigned>(idx) - 1;
            unsigned exp = 1;
            if (peek() == '^') {
                ++pos_;
                Int e = parse_digits();
                if (e > 1024) fail("exponent too large");
                exp = static_cast<unsigned>(e);
            }
            (conjugate ? nu : mu)[i] += exp;
            return;
        }
        if (allow_empty_error && done()) fail("unexpected end of input");
        fail("unexpected character");
    }
};

std::string coeff_body(const GaussRational& c) {
    // Body without the leading sign for real values; complex values keep the
    // full parenthesized literal.
    if (c.is_real()) {
        Rational a = c.re < 0 ? Rational(-c.re) : c.re;
        return to_string(a);
    }
    return "(" + to_string(c) + ")";
}

// One rendered term: negative-real coefficients carry the sign separately so
// terms join with " + " / " - ".
struct RenderedTerm {
    bool negative;
    std::string body;
};

RenderedTerm render_term(const GaussRational& c, const std::string& mono) {
    RenderedTerm t;
    t.negative = c.is_real() && c.re < 0;
    std::string cb = coeff_body(c);
    if (mono.empty())
        t.body = cb;
    else if (cb == "1")
        t.body = mono;
    else
        t.body = cb + "*" + mono;
    return t;
}

std::string join_terms(const std::vector<RenderedTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t j = 0; j < terms.size(); ++j) {
        if (j == 0)
            out += terms[j].negative ? "-" : "";
        else
            out += terms[j].negative ? " - " : " + ";
        out += terms[j].body;
    }
    return out;
}

void append_power(std::string& mono, const std::string& var, unsigned exp) {
    if (exp == 0) return;
    if (!mono.empty()) mono += "*";
    mono += var;
    if (exp > 1) mono += "^" + std::to_string(exp);
}

}  // namespace

BPolyN parse_polyn(std::string_view text, unsigned dim) {
    if (dim < 1) throw std::invalid_argument("dimension must be at least 1");
    return Parser(text, dim).parse();
}

BPoly2 parse_poly2(std::string_view text) { return to_bpoly2(parse_polyn(text, 2)); }

GaussRational parse_gaussian(std::string_view text) {
    return Parser(text, 1).parse_single_gaussian();
}

std::string to_string(const BPoly2& f) {
    std::vector<std::pair<Mono2, GaussRational>> terms(f.coeffs().begin(), f.coeffs().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        auto ka = std::tuple{a.first.weighted_degree(), a.first.h, a.first.k, a.first.m, a.first.p};
        auto kb = std::tuple{b.first.weighted_degree(), b.first.h, b.first.k, b.first.m, b.first.p};
        return ka < kb;
    });
    std::vector<RenderedTerm> rendered;
    for (const auto& [mo, c] : terms) {
        std::string mono;
        append_power(mono, "z1", mo.h);
        append_power(mono, "~z1", mo.k);
        append_power(mono, "z2", mo.m);
        append_power(mono, "~z2", mo.p);
        rendered.push_back(render_term(c, mono));
    }
    return join_terms(rendered);
}

std::string to_string(const BPolyN& f) {
    std::vector<std::pair<MonoN, GaussRational>> terms(f.coeffs().begin(), f.coeffs().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        auto ka = std::tuple{a.first.weighted_degree(), a.first.mu, a.first.nu};
        auto kb = std::tuple{b.first.weighted_degree(), b.first.mu, b.first.nu};
        return ka < kb;
    });
    std::vector<RenderedTerm> rendered;
    for (const auto& [mo, c] : terms) {
        std::string mono;
        for (unsigned i = 0; i < mo.dim(); ++i) {
            append_power(mono, "z" + std::to_string(i + 1), mo.mu[i]);
            append_power(mono, "~z" + std::to_string(i + 1), mo.nu[i]);
        }
        rendered.push_back(render_term(c, mono));
    }
    return join_terms(rendered);
}

std::string to_string(const ParamPoly& q) {
    std::vector<std::pair<ParamPoly::Key, GaussRational>> terms(q.terms().begin(),
                                                                q.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        auto ka = std::tuple{a.first.first + a.first.second, a.first.first};
        auto kb = std::tuple{b.first.first + b.first.second, b.first.first};
        return ka < kb;
    });
    std::vector<RenderedTerm> rendered;
    for (const auto& [key, c] : terms) {
        std::string mono;
        append_power(mono, "a", key.first);
        append_power(mono, "~a", key.second);
        rendered.push_back(render_term(c, mono));
    }
    return join_terms(rendered);
}

}  // namespace holoext
