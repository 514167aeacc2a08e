/*
   Critical-point / critical-value structure of a rational polynomial,
   computed exactly and without ever extracting algebraic roots. All the
   collision logic goes through the collision polynomial
       R(t) = Res_x(f(x) - t, s(x)),   s = squarefree part of f',
   whose root multiplicities over the closure count how many distinct
   critical points share each critical value.
*/
#pragma once

#include <utility>
#include <vector>

#include "fxgy/poly.hpp"

namespace fxgy {

enum class CollisionClass {
    AllDistinct,      // no two distinct critical points share a value
    AtMostTwoEqual,   // some value shared, but never by three distinct points
    ThreeOrMoreEqual  // some value shared by three or more distinct points
};

struct CriticalReport {
    int degree = 0;
    int distinct_critical_points = 0;  // deg of squarefree part of f'
    int simple_critical_points = 0;    // deg of the multiplicity-1 part of f'
    // (multiplicity in f', number of distinct points with it), multiplicity increasing
    std::vector<std::pair<int, int>> multiplicity_profile;
    CollisionClass collision_class = CollisionClass::AllDistinct;
    // Some critical point of multiplicity <= 2 holds a value shared with no
    // other critical point. Requires at least two distinct critical points.
    bool has_low_mult_distinct_witness = false;
};

// R(t) as above; degree = number of distinct critical points. Needs deg f >= 2.
Poly collision_poly(const Poly& f);

CriticalReport critical_report(const Poly& f);

// True when some critical point of multiplicity <= max_mult (as a root of f')
// holds a critical value shared with no other critical point. Decided through
// gcds of collision polynomials; needs deg f >= 2 and at least two distinct
// critical points (returns false below that).
bool has_unshared_value_at_mult_le(const Poly& f, int max_mult);

}  // namespace fxgy
