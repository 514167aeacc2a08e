/*
   Exact rational arithmetic on top of GMP. Values are always canonical
   (gcd(|num|, den) = 1, den >= 1) and every operation is exact; nothing
   here ever rounds.
*/
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace fxgy {

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // implicit: lets 2 * r, r + 1 read naturally
    Rational(long n, long d) : q_(n, d) { canon(); }
    Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) { canon(); }
    explicit Rational(const mpz_class& n) : q_(n) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / q_));
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational pow(long e) const {
        if (e < 0) return inv().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        Rational r;
        r.q_ = mpq_class(n, d);  // already canonical: num/den coprime
        return r;
    }

    // Exact n-th root, if one exists in Q. Even n requires a nonnegative value.
    std::optional<Rational> nth_root(unsigned n) const {
        if (n == 0) throw std::domain_error("Rational: 0th root");
        if (is_zero()) return Rational(0);
        if (sign() < 0 && n % 2 == 0) return std::nullopt;
        auto zroot = [n](const mpz_class& v) -> std::optional<mpz_class> {
            mpz_class r;
            mpz_root(r.get_mpz_t(), v.get_mpz_t(), n);
            mpz_class back;
            mpz_pow_ui(back.get_mpz_t(), r.get_mpz_t(), n);
            if (back != v) return std::nullopt;
            return r;
        };
        mpz_class nu = num(), de = den();
        bool neg = nu < 0;
        if (neg) nu = -nu;
        auto rn = zroot(nu);
        auto rd = zroot(de);
        if (!rn || !rd) return std::nullopt;
        if (neg) *rn = -*rn;
        return Rational(*rn, *rd);
    }

    bool is_square() const { return nth_root(2).has_value(); }

    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    // Accepts "p" or "p/q" with an optional leading minus; q must be positive digits.
    static std::optional<Rational> from_string(const std::string& s) {
        if (s.empty()) return std::nullopt;
        size_t i = 0;
        bool neg = false;
        if (s[i] == '-') { neg = true; ++i; }
        size_t numStart = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == numStart) return std::nullopt;
        mpz_class nu(s.substr(numStart, i - numStart), 10);
        mpz_class de(1);
        if (i < s.size()) {
            if (s[i] != '/') return std::nullopt;
            ++i;
            size_t denStart = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == denStart || i != s.size()) return std::nullopt;
            de = mpz_class(s.substr(denStart), 10);
            if (de == 0) return std::nullopt;
        }
        if (neg) nu = -nu;
        return Rational(nu, de);
    }

    double to_double() const { return q_.get_d(); }

private:
    void canon() {
        if (q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }

    mpq_class q_;
};

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace fxgy
