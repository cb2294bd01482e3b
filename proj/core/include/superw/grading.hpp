#pragma once

#include <vector>

#include "superw/util.hpp"

namespace superw {

/// Z2-graded dimension of gl(M|N): indices 1..M are even, M+1..M+N odd.
struct GradedDim {
    int even = 0;  // M
    int odd = 0;   // N

    GradedDim() = default;
    GradedDim(int m, int n) : even(m), odd(n) {
        if (m < 0 || n < 0 || m + n < 1) throw ConfigError("GradedDim: need M,N >= 0 and M+N >= 1");
    }

    int dim() const { return even + odd; }
    int parity(int a) const {
        if (a < 1 || a > dim()) throw Error("GradedDim: index out of range");
        return a <= even ? 0 : 1;
    }
    friend bool operator==(const GradedDim&, const GradedDim&) = default;
};

/// Parity vector of a (possibly interleaved) graded space; entry a-1 is [a].
using Parities = std::vector<int>;

inline Parities parities_of(const GradedDim& d) {
    Parities p(d.dim());
    for (int a = 1; a <= d.dim(); ++a) p[a - 1] = d.parity(a);
    return p;
}

inline Parities ungraded_space(int dim) { return Parities(dim, 0); }

/// Composite parity layout of a graded tensor product, index (i,k) -> (i-1)*dim(B)+k.
inline Parities tensor_space(const Parities& a, const Parities& b) {
    Parities p;
    p.reserve(a.size() * b.size());
    for (int x : a)
        for (int y : b) p.push_back((x + y) % 2);
    return p;
}

}  // namespace superw
