/*
   Functional decomposition over Q. Right factors come out in the normal
   form h monic, h(0) = 0, which makes the degree-k inner factor unique and
   turns "is f = g o h?" into a decision procedure (characteristic zero:
   the coefficient-matching system is triangular with integer pivots).
*/
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fxgy/poly.hpp"

namespace fxgy {

struct Bidecomposition {
    Poly outer;  // g
    Poly inner;  // h, monic with h(0) = 0
};

// The unique normalized (g, h) with f = g o h and deg h = inner_degree, if
// one exists. inner_degree must be a proper divisor of deg f.
std::optional<Bidecomposition> right_factor(const Poly& f, int inner_degree);

struct DecompositionChain {
    std::vector<Poly> factors;  // outermost first; composing left to right gives f back

    Poly reassemble() const;
};

// A maximal chain of indecomposable factors. Greedy: peels the smallest
// valid inner degree first (any maximal chain is acceptable; only length
// and degree multiset are canonical).
DecompositionChain full_decomposition(const Poly& f);

bool is_indecomposable(const Poly& f);

// (u, v) with u != 0 and f(x) = g(ux + v), if any linear substitution works.
// Degrees must match and be >= 1.
std::optional<std::pair<Rational, Rational>> linear_equivalence(const Poly& f, const Poly& g);

}  // namespace fxgy
