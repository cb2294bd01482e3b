#include "superw/linalg.hpp"

namespace superw {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (!m.at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
        Rat inv = Rat(1) / m.at(row, col);
        for (int c = 0; c < m.cols; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Rat f = m.at(r, col);
            for (int c = 0; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    int n = m.rows;
    RatMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = Rat(1);
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    RatMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
    RatMatrix r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[free] = Rat(1);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -r.at(static_cast<int>(pr), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b, bool* unique) {
    RatMatrix aug(a.rows, a.cols + 1);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols) = b[static_cast<std::size_t>(r)];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;  // inconsistent
    if (unique) *unique = static_cast<int>(pivots.size()) == a.cols;
    std::vector<Rat> x(a.cols, Rat(0));
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug.at(static_cast<int>(pr), a.cols);
    return x;
}

}  // namespace superw
