#pragma once

#include <optional>
#include <vector>

#include "superw/rational.hpp"

namespace superw {

/// Dense exact matrix for rank / inverse / nullspace work.
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;  // row-major

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static RatMatrix identity(int n);
};

/// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(RatMatrix& m);

int rank(RatMatrix m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Basis of the right nullspace (each entry has length m.cols).
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

/// Solves A x = b exactly. Returns nullopt when inconsistent; when
/// underdetermined, free variables are set to zero and *unique = false.
std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b, bool* unique);

}  // namespace superw
