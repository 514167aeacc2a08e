#include "fxgy/poly.hpp"

#include <algorithm>
#include <sstream>

namespace fxgy {

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    Poly r(p);
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    r.normalize();
    return r;
}

Rational Poly::eval(const Rational& v) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::one();
    Poly base(*this);
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("Poly: monic of zero polynomial");
    return lc().inv() * *this;
}

Poly Poly::shift(const Rational& c) const {
    // Taylor coefficients at c via repeated synthetic division by (x - c):
    // f(x) = sum b_k (x - c)^k  gives  f(x + c) = sum b_k x^k.
    if (is_constant()) return *this;
    std::vector<Rational> a = c_;
    std::vector<Rational> out(c_.size(), Rational(0));
    for (size_t k = 0; k < out.size(); ++k) {
        size_t m = a.size() - 1;
        if (m == 0) {
            out[k] = a[0];
            break;
        }
        std::vector<Rational> q(m);
        q[m - 1] = a[m];
        for (size_t i = m - 1; i >= 1; --i) q[i - 1] = a[i] + c * q[i];
        out[k] = a[0] + c * q[0];
        a = std::move(q);
    }
    return Poly::from_coeffs(std::move(out));
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly r = a;
    if (a.is_zero() || a.degree() < b.degree()) return {Poly(), r};
    int db = b.degree();
    Rational blc = b.lc();
    std::vector<Rational> q(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Rational f = r.lc() / blc;
        q[static_cast<size_t>(k)] = f;
        r -= Poly::monomial(f, k) * b;
    }
    return {Poly::from_coeffs(std::move(q)), r};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("Poly: division expected to be exact");
    return q;
}

// ---------------------------------------------------------------------------
// Integer-level core: primitive polynomials over Z, pseudo-remainders and the
// subresultant PRS. Keeps coefficient growth polynomial where plain rational
// Euclid would explode.

namespace {

using ZVec = std::vector<mpz_class>;

int zdeg(const ZVec& a) { return static_cast<int>(a.size()) - 1; }

void znormalize(ZVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class zcontent(const ZVec& a) {
    mpz_class g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zdiv_scalar(ZVec& a, const mpz_class& d) {
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

void zmul_scalar(ZVec& a, const mpz_class& m) {
    for (auto& c : a) c *= m;
}

// Pseudo-remainder: returns lc(b)^(deg a - deg b + 1) * a mod b.
ZVec zprem(ZVec a, const ZVec& b) {
    int db = zdeg(b);
    const mpz_class& blc = b.back();
    int e = zdeg(a) - db + 1;
    while (!a.empty() && zdeg(a) >= db) {
        mpz_class alc = a.back();
        int k = zdeg(a) - db;
        zmul_scalar(a, blc);
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(i + k)] -= alc * b[static_cast<size_t>(i)];
        znormalize(a);
        --e;
    }
    if (e > 0) {
        mpz_class m;
        mpz_pow_ui(m.get_mpz_t(), blc.get_mpz_t(), static_cast<unsigned long>(e));
        zmul_scalar(a, m);
    }
    return a;
}

// Splits p into scale * primitive with scale > 0 and content(primitive) = 1.
ZVec to_primitive(const Poly& p, Rational& scale) {
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    ZVec z(p.coeffs().size());
    for (size_t i = 0; i < z.size(); ++i) {
        const Rational& c = p.coeffs()[i];
        z[i] = c.num() * (den_lcm / c.den());
    }
    mpz_class cont = zcontent(z);
    if (cont == 0) {
        scale = Rational(0);
        return {};
    }
    zdiv_scalar(z, cont);
    scale = Rational(cont, den_lcm);
    return z;
}

Poly from_z(const ZVec& z) {
    std::vector<Rational> c(z.size());
    for (size_t i = 0; i < z.size(); ++i) c[i] = Rational(z[i]);
    return Poly::from_coeffs(std::move(c));
}

// Resultant of nonzero primitive integer polynomials (subresultant PRS).
mpz_class zresultant(ZVec A, ZVec B) {
    int s = 1;
    if (zdeg(A) < zdeg(B)) {
        if ((zdeg(A) & 1) && (zdeg(B) & 1)) s = -s;
        std::swap(A, B);
    }
    if (zdeg(B) < 0) throw std::domain_error("zresultant: zero input");
    if (zdeg(A) == 0) return 1;  // two nonzero constants
    mpz_class g = 1, h = 1;
    while (zdeg(B) > 0) {
        int delta = zdeg(A) - zdeg(B);
        if ((zdeg(A) & 1) && (zdeg(B) & 1)) s = -s;
        ZVec R = zprem(A, B);
        A = std::move(B);
        if (R.empty()) return 0;
        mpz_class divisor = g, hp;
        mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        divisor *= hp;
        zdiv_scalar(R, divisor);
        B = std::move(R);
        g = A.back();
        if (delta > 0) {
            mpz_class gd, hd;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
        }
    }
    // deg B == 0, B nonzero
    mpz_class ld, hd, res;
    mpz_pow_ui(ld.get_mpz_t(), B.back().get_mpz_t(), static_cast<unsigned long>(zdeg(A)));
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(zdeg(A) - 1));
    mpz_divexact(res.get_mpz_t(), ld.get_mpz_t(), hd.get_mpz_t());
    return s < 0 ? mpz_class(-res) : res;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd: both inputs zero");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::one();
    Rational sa, sb;
    ZVec A = to_primitive(a, sa), B = to_primitive(b, sb);
    if (zdeg(A) < zdeg(B)) std::swap(A, B);
    // primitive PRS
    while (true) {
        ZVec R = zprem(A, B);
        if (R.empty()) break;
        mpz_class cont = zcontent(R);
        zdiv_scalar(R, cont);
        A = std::move(B);
        B = std::move(R);
    }
    return from_z(B).monic();
}

Rational resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant: zero input");
    if (a.is_constant() && b.is_constant()) return Rational(1);
    if (a.is_constant()) return a.lc().pow(b.degree());
    if (b.is_constant()) return b.lc().pow(a.degree());
    Rational sa, sb;
    ZVec A = to_primitive(a, sa), B = to_primitive(b, sb);
    Rational r = sa.pow(b.degree()) * sb.pow(a.degree());
    return r * Rational(zresultant(std::move(A), std::move(B)));
}

Poly SquarefreeDecomposition::reassemble() const {
    Poly p = Poly::constant(unit);
    for (const auto& part : parts) p = p * part.factor.pow(static_cast<unsigned>(part.multiplicity));
    return p;
}

Poly SquarefreeDecomposition::factor_product(int lo, int hi) const {
    Poly p = Poly::one();
    for (const auto& part : parts)
        if (part.multiplicity >= lo && part.multiplicity <= hi) p = p * part.factor;
    return p;
}

SquarefreeDecomposition squarefree_decompose(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_decompose: zero input");
    SquarefreeDecomposition out;
    out.unit = f.lc();
    if (f.is_constant()) return out;
    Poly F = f.monic();
    Poly Fp = F.derivative();
    Poly g = gcd(F, Fp);
    Poly c = exact_div(F, g);
    Poly d = exact_div(Fp, g) - c.derivative();
    int i = 1;
    while (!c.is_constant()) {
        Poly p = gcd(c, d);
        if (!p.is_constant()) out.parts.push_back({p, i});
        c = exact_div(c, p);
        d = exact_div(d, p) - c.derivative();
        ++i;
    }
    return out;
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part: zero input");
    if (f.is_constant()) return Poly::one();
    auto sqf = squarefree_decompose(f);
    Poly p = Poly::one();
    for (const auto& part : sqf.parts) p = p * part.factor;
    return p;
}

Poly compose(const Poly& g, const Poly& h) {
    Poly acc;
    for (int i = g.degree(); i >= 0; --i) {
        acc = acc * h;
        acc += Poly::constant(g.coeff(i));
    }
    return acc;
}

Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::domain_error("interpolate: repeated abscissa");
    Poly res;
    Poly basis = Poly::one();
    for (const auto& [xi, yi] : points) {
        Rational delta = yi - res.eval(xi);
        if (!delta.is_zero()) res += (delta / basis.eval(xi)) * basis;
        basis = basis * (Poly::x() - Poly::constant(xi));
    }
    return res;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? "-" : "+");
        }
        Rational a = c.abs();
        if (i == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace fxgy
