#include "fxgy/dickson.hpp"

namespace fxgy {

Poly dickson(int n, const Rational& a) {
    if (n < 0) throw std::domain_error("dickson: index must be nonnegative");
    Poly prev = Poly::constant(2);  // D_0 = 2 keeps the recurrence and the
    Poly cur = Poly::x();           // composition law uniform
    if (n == 0) return prev;
    for (int i = 1; i < n; ++i) {
        Poly next = Poly::x() * cur - Poly::constant(a) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Poly DicksonForm::reassemble() const {
    return scale * dickson(n, beta).shift(gamma) + Poly::constant(e0);
}

std::optional<DicksonForm> dickson_detect(const Poly& f) {
    if (f.is_zero() || f.degree() < 3)
        throw std::domain_error("dickson_detect: polynomial must have degree >= 3");
    int n = f.degree();
    Rational lead = f.lc();
    Rational gamma = f.coeff(n - 1) / (Rational(n) * lead);
    Rational beta =
        (Rational(binomial(static_cast<unsigned long>(n), 2)) * gamma * gamma -
         f.coeff(n - 2) / lead) /
        Rational(n);
    Poly candidate = lead * dickson(n, beta).shift(gamma);
    Poly diff = f - candidate;
    if (!diff.is_constant()) return std::nullopt;
    return DicksonForm{n, gamma, beta, diff.constant_term(), lead};
}

}  // namespace fxgy
