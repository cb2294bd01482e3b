#include "superw/supermatrix.hpp"

namespace superw {

namespace {
const Rat kZero(0);
}

void SuperMatrix::check(int r, int c) const {
    if (r < 1 || c < 1 || r > dim() || c > dim()) throw Error("SuperMatrix: index out of range");
}

const Rat& SuperMatrix::at(int r, int c) const {
    check(r, c);
    auto it = e_.find({r, c});
    return it == e_.end() ? kZero : it->second;
}

void SuperMatrix::set(int r, int c, const Rat& v) {
    check(r, c);
    if (v.is_zero())
        e_.erase({r, c});
    else
        e_[{r, c}] = v;
}

void SuperMatrix::add_to(int r, int c, const Rat& v) {
    check(r, c);
    if (v.is_zero()) return;
    auto [it, fresh] = e_.try_emplace({r, c}, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) e_.erase(it);
    }
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
    if (space_ != o.space_) throw Error("SuperMatrix: space mismatch in +");
    for (const auto& [rc, v] : o.e_) add_to(rc.first, rc.second, v);
    return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
    if (space_ != o.space_) throw Error("SuperMatrix: space mismatch in -");
    for (const auto& [rc, v] : o.e_) add_to(rc.first, rc.second, -v);
    return *this;
}

SuperMatrix SuperMatrix::operator-() const {
    SuperMatrix r(space_);
    for (const auto& [rc, v] : e_) r.e_[rc] = -v;
    return r;
}

SuperMatrix operator*(const Rat& s, const SuperMatrix& m) {
    SuperMatrix r(m.space_);
    if (s.is_zero()) return r;
    for (const auto& [rc, v] : m.e_) r.e_[rc] = s * v;
    return r;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.space_ != b.space_) throw Error("SuperMatrix: space mismatch in *");
    SuperMatrix r(a.space_);
    // sparse row-times-column via b's row index
    std::map<int, std::vector<std::pair<int, const Rat*>>> brows;
    for (const auto& [rc, v] : b.e_) brows[rc.first].push_back({rc.second, &v});
    for (const auto& [rc, va] : a.e_) {
        auto it = brows.find(rc.second);
        if (it == brows.end()) continue;
        for (const auto& [c, vb] : it->second) r.add_to(rc.first, c, va * *vb);
    }
    return r;
}

SuperMatrix SuperMatrix::identity(const Parities& space) {
    SuperMatrix r(space);
    for (int a = 1; a <= r.dim(); ++a) r.set(a, a, Rat(1));
    return r;
}

SuperMatrix SuperMatrix::unit(const Parities& space, int a, int b) {
    SuperMatrix r(space);
    r.set(a, b, Rat(1));
    return r;
}

SuperMatrix graded_commutator(const SuperMatrix& a, int pa, const SuperMatrix& b, int pb) {
    SuperMatrix ba = b * a;
    if ((pa & 1) && (pb & 1)) return a * b + ba;
    return a * b - ba;
}

Rat supertrace(const SuperMatrix& a) {
    Rat s(0);
    for (const auto& [rc, v] : a.entries())
        if (rc.first == rc.second) s += a.parity(rc.first) ? -v : v;
    return s;
}

Rat trace(const SuperMatrix& a) {
    Rat s(0);
    for (const auto& [rc, v] : a.entries())
        if (rc.first == rc.second) s += v;
    return s;
}

SuperMatrix graded_tensor(const SuperMatrix& a, const SuperMatrix& b) {
    SuperMatrix r(tensor_space(a.space(), b.space()));
    int db = b.dim();
    for (const auto& [ij, va] : a.entries()) {
        for (const auto& [kl, vb] : b.entries()) {
            int row = (ij.first - 1) * db + kl.first;
            int col = (ij.second - 1) * db + kl.second;
            int sign = ((b.parity(kl.first) + b.parity(kl.second)) * a.parity(ij.second)) % 2;
            Rat v = va * vb;
            r.set(row, col, sign ? -v : v);
        }
    }
    return r;
}

SuperMatrix permutation_P(const GradedDim& d) {
    Parities sp = parities_of(d);
    SuperMatrix r(tensor_space(sp, sp));
    int n = d.dim();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            int row = (a - 1) * n + b;
            int col = (b - 1) * n + a;
            r.set(row, col, Rat(d.parity(a) * d.parity(b) ? -1 : 1));
        }
    return r;
}

ThetaData::ThetaData(int m, int half_odd) : M(m), n(half_odd) {
    if (m < 0 || half_odd < 0 || m + half_odd < 1) throw ConfigError("ThetaData: bad sizes");
}

int ThetaData::theta(int a) const {
    if (a < 1 || a > dim()) throw Error("ThetaData: index out of range");
    if (a <= M) return 1;
    return a <= M + n ? 1 : -1;
}

int ThetaData::bar(int a) const {
    if (a < 1 || a > dim()) throw Error("ThetaData: index out of range");
    return a <= M ? M + 1 - a : 2 * M + 2 * n + 1 - a;
}

SuperMatrix transpose_t(const SuperMatrix& a, const ThetaData& th) {
    if (a.dim() != th.dim()) throw Error("transpose_t: dimension mismatch");
    SuperMatrix r(a.space());
    for (const auto& [rc, v] : a.entries()) {
        int x = rc.first, y = rc.second;
        int sign = (th.parity(x) * (th.parity(y) + 1)) % 2 ? -1 : 1;
        sign *= th.theta(x) * th.theta(y);
        r.add_to(th.bar(y), th.bar(x), sign < 0 ? -v : v);
    }
    return r;
}

SuperMatrix q_operator(const ThetaData& th) {
    GradedDim d = th.dims();
    Parities sp = parities_of(d);
    SuperMatrix r(tensor_space(sp, sp));
    int n = d.dim();
    // Q = sum_{ij} (-1)^{[j]} E_ij^t (x) E_ji
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int sign = d.parity(j) ? -1 : 1;
            int tsign = (d.parity(i) * (d.parity(j) + 1)) % 2 ? -1 : 1;
            tsign *= th.theta(i) * th.theta(j);
            // E_ij^t = tsign * E_{bar j, bar i}; tensor with E_ji picks up the
            // graded Kronecker sign on column (bar i, j).
            int bj = th.bar(j), bi = th.bar(i);
            int row = (bj - 1) * n + j;
            int col = (bi - 1) * n + i;
            int ksign = ((d.parity(j) + d.parity(i)) * d.parity(bi)) % 2 ? -1 : 1;
            r.add_to(row, col, Rat(sign * tsign * ksign));
        }
    return r;
}

}  // namespace superw
