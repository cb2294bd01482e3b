#include "superw/polymatrix.hpp"

namespace superw {

bool PolyMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    if (n_ != o.n_) throw Error("PolyMatrix: size mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
    if (n_ != o.n_) throw Error("PolyMatrix: size mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_ != b.n_) throw Error("PolyMatrix: size mismatch");
    PolyMatrix r(a.n_);
    for (int i = 1; i <= a.n_; ++i)
        for (int k = 1; k <= a.n_; ++k) {
            const Poly& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 1; j <= a.n_; ++j) {
                const Poly& y = b.at(k, j);
                if (y.is_zero()) continue;
                r.at(i, j) += x * y;
            }
        }
    return r;
}

PolyMatrix operator*(const Rat& s, const PolyMatrix& m) {
    PolyMatrix r(m.n_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) r.e_[i] = s * m.e_[i];
    return r;
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix r(n);
    for (int i = 1; i <= n; ++i) r.at(i, i) = Poly(Rat(1));
    return r;
}

PolyMatrix PolyMatrix::lift(const SuperMatrix& m) {
    PolyMatrix r(m.dim());
    for (const auto& [rc, v] : m.entries()) r.at(rc.first, rc.second) = Poly(v);
    return r;
}

PolyMatrix PolyMatrix::substituted(const std::function<Poly(const GenSymbol&)>& fn) const {
    PolyMatrix r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].substituted(fn);
    return r;
}

PolyMatrix pb_matrix(const PolyMatrix& a, const PolyMatrix& b, const BracketTable& t) {
    if (a.dim() != b.dim()) throw Error("pb_matrix: size mismatch");
    int n = a.dim();
    PolyMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            const Poly& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 1; j <= n; ++j) {
                const Poly& y = b.at(k, j);
                if (y.is_zero()) continue;
                r.at(i, j) += poisson_bracket(x, y, t);
            }
        }
    return r;
}

PolyMatrix kron_first(const PolyMatrix& x, const GradedDim& d) {
    int n = d.dim();
    if (x.dim() != n) throw Error("kron_first: size mismatch");
    PolyMatrix r(n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Poly& v = x.at(i, j);
            if (v.is_zero()) continue;
            for (int k = 1; k <= n; ++k) r.at((i - 1) * n + k, (j - 1) * n + k) += v;
        }
    return r;
}

PolyMatrix kron_second(const PolyMatrix& x, const GradedDim& d) {
    int n = d.dim();
    if (x.dim() != n) throw Error("kron_second: size mismatch");
    PolyMatrix r(n * n);
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            const Poly& v = x.at(k, l);
            if (v.is_zero()) continue;
            int pe = (d.parity(k) + d.parity(l)) % 2;
            for (int j = 1; j <= n; ++j) {
                // sign (-1)^{(entry parity)(column parity of the first factor)}
                Poly signed_v = (pe && d.parity(j)) ? -v : v;
                r.at((j - 1) * n + k, (j - 1) * n + l) += signed_v;
            }
        }
    return r;
}

void UVPoly::prune(const std::pair<int, int>& key) {
    auto it = t_.find(key);
    if (it != t_.end() && it->second.is_zero()) t_.erase(it);
}

void UVPoly::add(int pu, int pv, const PolyMatrix& m) {
    if (m.is_zero()) return;
    auto [it, fresh] = t_.try_emplace({pu, pv}, m);
    if (!fresh) {
        it->second += m;
        prune({pu, pv});
    }
}

UVPoly& UVPoly::operator+=(const UVPoly& o) {
    for (const auto& [k, m] : o.t_) add(k.first, k.second, m);
    return *this;
}

UVPoly& UVPoly::operator-=(const UVPoly& o) {
    for (const auto& [k, m] : o.t_) add(k.first, k.second, Rat(-1) * m);
    return *this;
}

UVPoly operator*(const UVPoly& a, const UVPoly& b) {
    UVPoly r;
    for (const auto& [ka, ma] : a.t_)
        for (const auto& [kb, mb] : b.t_) r.add(ka.first + kb.first, ka.second + kb.second, ma * mb);
    return r;
}

UVPoly UVPoly::shifted(int pu, int pv, const Rat& c) const {
    UVPoly r;
    for (const auto& [k, m] : t_) r.add(k.first + pu, k.second + pv, c * m);
    return r;
}

UVPoly UVPoly::monomial(int pu, int pv, const PolyMatrix& m) {
    UVPoly r;
    r.add(pu, pv, m);
    return r;
}

}  // namespace superw
