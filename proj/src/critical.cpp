#include "fxgy/critical.hpp"

namespace fxgy {

namespace {

// Res_x(f(x) - t, s(x)) as a polynomial in t, by evaluation at deg s + 1
// rational points followed by interpolation. Evaluation points walk
// 0, 1, -1, 2, -2, ...; since lc(f - t0) = lc(f) for every t0, no
// evaluation can degenerate and none is skipped.
Poly resultant_in_t(const Poly& f, const Poly& s) {
    std::vector<std::pair<Rational, Rational>> pts;
    long v = 0;
    int needed = s.degree() + 1;
    for (int i = 0; i < needed; ++i) {
        Rational t0(v);
        v = v <= 0 ? -v + 1 : -v;
        pts.push_back({t0, resultant(f - Poly::constant(t0), s)});
    }
    return interpolate(pts);
}

void require_degree(const Poly& f) {
    if (f.is_zero() || f.degree() < 2)
        throw std::domain_error("critical: polynomial must have degree >= 2");
}

}  // namespace

Poly collision_poly(const Poly& f) {
    require_degree(f);
    return resultant_in_t(f, squarefree_part(f.derivative()));
}

bool has_unshared_value_at_mult_le(const Poly& f, int max_mult) {
    require_degree(f);
    auto dsqf = squarefree_decompose(f.derivative());
    Poly s = dsqf.factor_product(1, 1 << 30);
    if (s.degree() < 2) return false;
    Poly low = dsqf.factor_product(1, max_mult);
    if (low.is_constant()) return false;
    Poly R = resultant_in_t(f, s);
    Poly W = squarefree_decompose(R).factor_product(1, 1);  // values held by exactly one point
    if (W.is_constant()) return false;
    Poly Rlow = resultant_in_t(f, low);
    return !gcd(W, Rlow).is_constant();
}

CriticalReport critical_report(const Poly& f) {
    require_degree(f);
    CriticalReport rep;
    rep.degree = f.degree();
    auto dsqf = squarefree_decompose(f.derivative());
    Poly s = Poly::one();
    for (const auto& part : dsqf.parts) {
        rep.multiplicity_profile.push_back({part.multiplicity, part.factor.degree()});
        rep.distinct_critical_points += part.factor.degree();
        if (part.multiplicity == 1) rep.simple_critical_points = part.factor.degree();
        s = s * part.factor;
    }
    Poly R = resultant_in_t(f, s);
    auto rsqf = squarefree_decompose(R);
    int maxMult = 1;
    for (const auto& part : rsqf.parts) maxMult = std::max(maxMult, part.multiplicity);
    rep.collision_class = maxMult == 1   ? CollisionClass::AllDistinct
                          : maxMult == 2 ? CollisionClass::AtMostTwoEqual
                                         : CollisionClass::ThreeOrMoreEqual;
    if (s.degree() >= 2) {
        Poly W = rsqf.factor_product(1, 1);
        Poly low = dsqf.factor_product(1, 2);
        if (!W.is_constant() && !low.is_constant()) {
            Poly Rlow = resultant_in_t(f, low);
            rep.has_low_mult_distinct_witness = !gcd(W, Rlow).is_constant();
        }
    }
    return rep;
}

}  // namespace fxgy
