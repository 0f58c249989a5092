#pragma once

#include <holoext/rational.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace holoext {

/// Complex number with exact rational real and imaginary parts (a Gaussian
/// rational). Closed under +, -, *, conjugation and division by nonzero
/// values; all operations are exact. Immutable in spirit: every operation
/// returns a new value, so instances are freely shareable across threads.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(int r) : re(r) {}
    GaussRational(Rational r) : re(std::move(r)) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRational conj() const { return {re, -im}; }

    /// |z|^2 = z * conj(z), an exact nonnegative rational.
    Rational norm_sq() const { return re * re + im * im; }

    GaussRational operator-() const { return {-re, -im}; }

    GaussRational& operator+=(const GaussRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }

    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero Gaussian rational");
        Rational n = b.norm_sq();
        GaussRational num = a * b.conj();
        return {num.re / n, num.im / n};
    }

    GaussRational pow(unsigned n) const {
        GaussRational r(1);
        for (unsigned j = 0; j < n; ++j) r *= *this;
        return r;
    }

    friend bool operator==(const GaussRational&, const GaussRational&) = default;
};

/// Canonical text form: "3/4" when real, "0+1i" / "1/2-2/3i" otherwise.
std::string to_string(const GaussRational& z);

}  // namespace holoext
