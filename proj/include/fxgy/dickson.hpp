/*
   Dickson polynomials D_n(x, a), defined by D_n(y + a/y) = y^n + (a/y)^n,
   and the decision procedure for linear relatedness: every polynomial that
   is e1 * D_n(c1 x + c0, alpha) + e0 over the closure collapses, via the
   scaling identity b^n D_n(x, a) = D_n(bx, b^2 a), to a unique reduced
   rational witness f(x) = lc(f) * D_n(x + gamma, beta) + e0.
*/
#pragma once

#include <optional>

#include "fxgy/poly.hpp"

namespace fxgy {

// D_n(x, a): D_0 = 2, D_1 = x, D_n = x D_{n-1} - a D_{n-2}.
Poly dickson(int n, const Rational& a);

struct DicksonForm {
    int n = 0;
    Rational gamma;  // inner shift
    Rational beta;   // reduced parameter; beta == 0 means "pure power x^n"
    Rational e0;     // outer shift
    Rational scale;  // = lc of the input

    bool pure_power() const { return beta.is_zero(); }

    // The witnessed identity scale * D_n(x + gamma, beta) + e0, re-expanded.
    Poly reassemble() const;
};

// Reduced Dickson form of f if f is linearly related to a Dickson polynomial
// (equivalently: related over the algebraic closure). Needs deg f >= 3.
std::optional<DicksonForm> dickson_detect(const Poly& f);

}  // namespace fxgy
