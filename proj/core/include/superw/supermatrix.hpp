#pragma once

#include <map>
#include <utility>

#include "superw/grading.hpp"
#include "superw/rational.hpp"

namespace superw {

/// Square sparse matrix over an explicit parity layout. Indices are 1-based,
/// zero entries are never stored.
class SuperMatrix {
public:
    SuperMatrix() = default;
    explicit SuperMatrix(Parities space) : space_(std::move(space)) {}
    explicit SuperMatrix(const GradedDim& d) : space_(parities_of(d)) {}

    int dim() const { return static_cast<int>(space_.size()); }
    const Parities& space() const { return space_; }
    int parity(int a) const { return space_.at(a - 1); }

    const Rat& at(int r, int c) const;
    void set(int r, int c, const Rat& v);
    void add_to(int r, int c, const Rat& v);
    const std::map<std::pair<int, int>, Rat>& entries() const { return e_; }
    bool is_zero() const { return e_.empty(); }

    SuperMatrix& operator+=(const SuperMatrix& o);
    SuperMatrix& operator-=(const SuperMatrix& o);
    SuperMatrix operator-() const;
    friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
    friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
    friend SuperMatrix operator*(const Rat& s, const SuperMatrix& m);
    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
        return a.space_ == b.space_ && a.e_ == b.e_;
    }

    static SuperMatrix identity(const Parities& space);
    /// Matrix unit E_ab.
    static SuperMatrix unit(const Parities& space, int a, int b);

private:
    Parities space_;
    std::map<std::pair<int, int>, Rat> e_;
    void check(int r, int c) const;
};

inline SuperMatrix commutator(const SuperMatrix& a, const SuperMatrix& b) {
    return a * b - b * a;
}

/// [X,Y} = XY - (-1)^{[X][Y]} YX for homogeneous operators of the given parities.
SuperMatrix graded_commutator(const SuperMatrix& a, int pa, const SuperMatrix& b, int pb);

/// str(A) = sum_a (-1)^{[a]} A[a,a].
Rat supertrace(const SuperMatrix& a);

Rat trace(const SuperMatrix& a);

/// Graded Kronecker product: entry((i,k),(j,l)) = (-1)^{([k]+[l])[j]} A[i,j] B[k,l].
SuperMatrix graded_tensor(const SuperMatrix& a, const SuperMatrix& b);

/// P = sum_{ij} (-1)^{[j]} E_ij (x) E_ji on the tensor square; P^2 = 1.
SuperMatrix permutation_P(const GradedDim& d);

/// Signs and index reflection of the transposition t on gl(M|2n).
/// theta_a = +1 on the even block and on the first half of the odd block,
/// -1 on the second half; bar is the block-wise index reversal.
struct ThetaData {
    int M = 0;
    int n = 0;

    ThetaData() = default;
    ThetaData(int m, int half_odd);

    GradedDim dims() const { return GradedDim(M, 2 * n); }
    int dim() const { return M + 2 * n; }
    int parity(int a) const { return a <= M ? 0 : 1; }
    int theta(int a) const;
    int bar(int a) const;
};

/// E_ab -> (-1)^{[a]([b]+1)} theta_a theta_b E_{bar b, bar a}, extended linearly.
SuperMatrix transpose_t(const SuperMatrix& a, const ThetaData& th);

/// Q = P^{t_1}, the transposition applied in the first tensor factor of P.
SuperMatrix q_operator(const ThetaData& th);

}  // namespace superw
