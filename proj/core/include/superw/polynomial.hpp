#pragma once

#include <map>
#include <vector>

#include "superw/rational.hpp"
#include "superw/symbol.hpp"

namespace superw {

/// Canonically ordered product of generator powers. Odd symbols square to
/// zero, so their exponent is always 1. The empty monomial is the constant 1.
class Mono {
public:
    using Factors = std::vector<std::pair<GenSymbol, int>>;

    Mono() = default;
    explicit Mono(const GenSymbol& x) : f_{{x, 1}} {}

    const Factors& factors() const { return f_; }
    bool is_constant() const { return f_.empty(); }
    int degree() const;
    int parity() const;

    friend bool operator==(const Mono& x, const Mono& y) { return x.f_ == y.f_; }
    friend bool operator<(const Mono& x, const Mono& y);

    /// Product with Koszul sign. Returns sign 0 when an odd square appears.
    static std::pair<Mono, int> mul(const Mono& x, const Mono& y);

    /// Normalizes an arbitrarily ordered symbol sequence; sign 0 means zero.
    static std::pair<Mono, int> normalize(const std::vector<GenSymbol>& seq);

    std::string str() const;

private:
    Factors f_;
};

/// Element of the supercommutative polynomial ring: monomial -> coefficient,
/// zero coefficients never stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c) { add_term(Mono(), c); }
    explicit Poly(const GenSymbol& x) { add_term(Mono(x), Rat(1)); }
    Poly(const GenSymbol& x, const Rat& c) { add_term(Mono(x), c); }

    const std::map<Mono, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(const Mono& m, const Rat& c);
    const Rat& coeff(const Mono& m) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

    /// True when all monomials share one parity; sets it (constants are even).
    bool homogeneous_parity(int& parity_out) const;

    /// Replaces every symbol through fn, multiplying out in canonical order.
    /// fn must be parity-preserving.
    Poly substituted(const std::function<Poly(const GenSymbol&)>& fn) const;

    std::string str() const;

private:
    std::map<Mono, Rat> t_;
};

}  // namespace superw
