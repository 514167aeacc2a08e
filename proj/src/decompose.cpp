#include "fxgy/decompose.hpp"

namespace fxgy {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::optional<Bidecomposition> right_factor(const Poly& f, int inner_degree) {
    if (f.is_zero() || f.degree() < 2)
        throw std::domain_error("right_factor: polynomial must have degree >= 2");
    int n = f.degree();
    int k = inner_degree;
    if (k <= 1 || k >= n || n % k != 0)
        throw std::domain_error("right_factor: inner degree must be a proper divisor of deg f");
    int t = n / k;

    // Solve for h = x^k + c_{k-1} x^{k-1} + ... + c_1 x against the monic
    // normalization of f: the coefficient of x^(n-j) in h^t is linear in
    // c_{k-j} with pivot t once the higher c's are fixed, and g's lower
    // terms only reach degree n - k.
    Poly F = f.monic();
    Poly h = Poly::monomial(1, k);
    for (int j = 1; j <= k - 1; ++j) {
        Rational cur = h.pow(static_cast<unsigned>(t)).coeff(n - j);
        Rational c = (F.coeff(n - j) - cur) / Rational(t);
        h += Poly::monomial(c, k - j);
    }

    // Recover g from the h-adic expansion of the original f; every digit
    // must be a constant.
    std::vector<Rational> gc;
    Poly rem = f;
    for (int i = 0; i <= t; ++i) {
        auto [q, r] = divrem(rem, h);
        if (!r.is_constant()) return std::nullopt;
        gc.push_back(r.constant_term());
        rem = q;
    }
    if (!rem.is_zero()) return std::nullopt;
    Poly g = Poly::from_coeffs(std::move(gc));
    if (g.degree() != t) return std::nullopt;
    if (compose(g, h) != f) return std::nullopt;
    return Bidecomposition{g, h};
}

Poly DecompositionChain::reassemble() const {
    Poly acc = Poly::x();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) acc = compose(*it, acc);
    return acc;
}

DecompositionChain full_decomposition(const Poly& f) {
    if (f.is_zero() || f.degree() < 2)
        throw std::domain_error("full_decomposition: polynomial must have degree >= 2");
    int n = f.degree();
    for (int k = 2; k < n; ++k) {
        if (n % k != 0) continue;
        if (auto bd = right_factor(f, k)) {
            // smallest inner degree, so the peeled inner factor is indecomposable
            DecompositionChain chain = full_decomposition(bd->outer);
            chain.factors.push_back(bd->inner);
            return chain;
        }
    }
    return DecompositionChain{{f}};
}

bool is_indecomposable(const Poly& f) {
    if (f.is_zero() || f.degree() < 2)
        throw std::domain_error("is_indecomposable: polynomial must have degree >= 2");
    int n = f.degree();
    if (is_prime(n)) return true;
    for (int k = 2; k < n; ++k)
        if (n % k == 0 && right_factor(f, k)) return false;
    return true;
}

std::optional<std::pair<Rational, Rational>> linear_equivalence(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero() || f.degree() < 1 || f.degree() != g.degree())
        throw std::domain_error("linear_equivalence: degrees must match and be >= 1");
    int n = f.degree();
    Rational ratio = f.lc() / g.lc();

    std::vector<Rational> candidates;
    if (auto u = ratio.nth_root(static_cast<unsigned>(n))) {
        candidates.push_back(*u);
        if (n % 2 == 0 && !u->is_zero()) candidates.push_back(-*u);
    }
    for (const Rational& u : candidates) {
        Rational upow = u.pow(n - 1);
        Rational v = (f.coeff(n - 1) - g.coeff(n - 1) * upow) / (Rational(n) * g.lc() * upow);
        Poly mu = Poly::monomial(u, 1) + Poly::constant(v);
        if (compose(g, mu) == f) return std::make_pair(u, v);
    }
    return std::nullopt;
}

}  // namespace fxgy
