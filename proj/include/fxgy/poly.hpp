/*
   Dense univariate polynomials over the rationals. Coefficient i is the
   coefficient of x^i; the zero polynomial is the empty vector and reports
   the kZeroPolyDegree sentinel, so callers must branch on is_zero()
   explicitly. All values are immutable in spirit: every operation returns
   a fresh polynomial and never mutates shared state.
*/
#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fxgy/rational.hpp"

namespace fxgy {

inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();

class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& c) { return monomial(c, 0); }
    static Poly one() { return constant(1); }
    static Poly x() { return monomial(1, 1); }

    static Poly monomial(const Rational& c, int k) {
        Poly p;
        if (!c.is_zero()) {
            p.c_.assign(static_cast<size_t>(k) + 1, Rational(0));
            p.c_.back() = c;
        }
        return p;
    }

    static Poly from_coeffs(std::vector<Rational> coeffs) {
        Poly p;
        p.c_ = std::move(coeffs);
        p.normalize();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    int degree() const { return c_.empty() ? kZeroPolyDegree : static_cast<int>(c_.size()) - 1; }

    Rational coeff(int i) const {
        if (i < 0 || static_cast<size_t>(i) >= c_.size()) return Rational(0);
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational lc() const {
        if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
        return c_.back();
    }

    Rational constant_term() const { return coeff(0); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const;
    Rational eval(const Rational& v) const;
    Poly pow(unsigned e) const;
    Poly monic() const;
    // f(x + c), exact Taylor shift.
    Poly shift(const Rational& c) const;

    // Canonical text form, e.g. "10*x^2+5*x+1"; parseable back by the CLI grammar.
    std::string str() const;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
// Division known to be exact; throws if a remainder appears.
Poly exact_div(const Poly& a, const Poly& b);

// Monic greatest common divisor; inputs may not both be zero.
Poly gcd(const Poly& a, const Poly& b);

struct SquarefreeDecomposition {
    struct Part {
        Poly factor;       // monic, squarefree, nonconstant
        int multiplicity;  // strictly increasing across parts
    };
    Rational unit;
    std::vector<Part> parts;

    Poly reassemble() const;
    // Product of the factors with multiplicity in [lo, hi] (monic).
    Poly factor_product(int lo, int hi) const;
};

// Yun's algorithm; f must be nonzero. Characteristic-zero multiplicity structure.
SquarefreeDecomposition squarefree_decompose(const Poly& f);

// Product of the distinct monic irreducible-free factors, i.e. f / gcd(f, f').
Poly squarefree_part(const Poly& f);

// Res(a, b) with Res(a,b) = lc(a)^deg b * prod b(alpha_i) over the roots of a,
// and Res(a,b) = (-1)^(deg a * deg b) Res(b,a). Subresultant PRS over Z inside.
Rational resultant(const Poly& a, const Poly& b);

// g(h(x)), exact.
Poly compose(const Poly& g, const Poly& h);

// Unique polynomial of degree < points.size() through the given points;
// abscissae must be pairwise distinct.
Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace fxgy
