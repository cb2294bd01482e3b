#pragma once

#include <gmpxx.h>

#include <string>

#include "superw/util.hpp"

namespace superw {

/// Exact rational scalar. Always reduced, denominator > 0, equality structural.
/// This is the only number type in the library; no floating point anywhere.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit by design, coefficients read naturally
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw Error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rat parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw Error("Rat: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw Error("Rat: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rat(q);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    /// Canonical "num/den" form, denominator always printed.
    std::string str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }
    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rat rat_factorial(long n) {
    if (n < 0) throw Error("factorial of negative");
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(mpq_class(z));
}

inline Rat rat_binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rat(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(mpq_class(z));
}

inline Rat rat_pow(const Rat& base, int e) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace superw
