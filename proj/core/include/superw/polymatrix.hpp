#pragma once

#include "superw/bracket_table.hpp"
#include "superw/poisson.hpp"
#include "superw/supermatrix.hpp"

namespace superw {

/// Dense square matrix over the supercommutative polynomial ring.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}

    int dim() const { return n_; }
    Poly& at(int r, int c) { return e_[static_cast<std::size_t>(r - 1) * n_ + (c - 1)]; }
    const Poly& at(int r, int c) const { return e_[static_cast<std::size_t>(r - 1) * n_ + (c - 1)]; }
    bool is_zero() const;

    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const Rat& s, const PolyMatrix& m);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    static PolyMatrix identity(int n);
    static PolyMatrix lift(const SuperMatrix& m);  // scalar entries to constants

    /// Entrywise substitution.
    PolyMatrix substituted(const std::function<Poly(const GenSymbol&)>& fn) const;

private:
    int n_ = 0;
    std::vector<Poly> e_;
};

/// Bracket in matrix-product pattern: C_{XY} = sum_Z {A_{XZ}, B_{ZY}}.
/// For A = S_1(u)-type and B = S_2(v)-type blocks this reproduces
/// sum {S^{ab}, S^{cd}} E_ab (x) E_cd entrywise.
PolyMatrix pb_matrix(const PolyMatrix& a, const PolyMatrix& b, const BracketTable& t);

/// X (x) 1 on the graded tensor square; entries of X must sit at their
/// natural parity ([row]+[col]) for the Koszul signs to be meaningful.
PolyMatrix kron_first(const PolyMatrix& x, const GradedDim& d);
/// 1 (x) X on the graded tensor square.
PolyMatrix kron_second(const PolyMatrix& x, const GradedDim& d);

/// Laurent polynomial in two spectral parameters with PolyMatrix
/// coefficients; exponents may be negative.
class UVPoly {
public:
    UVPoly() = default;

    void add(int pu, int pv, const PolyMatrix& m);
    const std::map<std::pair<int, int>, PolyMatrix>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    UVPoly& operator+=(const UVPoly& o);
    UVPoly& operator-=(const UVPoly& o);
    friend UVPoly operator+(UVPoly a, const UVPoly& b) { return a += b; }
    friend UVPoly operator-(UVPoly a, const UVPoly& b) { return a -= b; }
    friend UVPoly operator*(const UVPoly& a, const UVPoly& b);
    friend bool operator==(const UVPoly& a, const UVPoly& b) { return a.t_ == b.t_; }

    /// Multiplication by the scalar monomial c * u^pu * v^pv.
    UVPoly shifted(int pu, int pv, const Rat& c = Rat(1)) const;

    static UVPoly monomial(int pu, int pv, const PolyMatrix& m);

private:
    std::map<std::pair<int, int>, PolyMatrix> t_;
    void prune(const std::pair<int, int>& key);
};

}  // namespace superw
