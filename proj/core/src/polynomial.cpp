#include "superw/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace superw {

std::string family_name(Family f) {
    switch (f) {
        case Family::Lambda: return "lambda";
        case Family::W: return "W";
        case Family::WbarMinus: return "Wbar-";
        case Family::WbarPlus: return "Wbar+";
        case Family::T: return "T";
        case Family::S: return "S";
        case Family::K: return "K";
        case Family::J: return "J";
    }
    throw Error("unknown family");
}

Family family_from_name(const std::string& s) {
    if (s == "lambda") return Family::Lambda;
    if (s == "W") return Family::W;
    if (s == "Wbar-") return Family::WbarMinus;
    if (s == "Wbar+") return Family::WbarPlus;
    if (s == "T") return Family::T;
    if (s == "S") return Family::S;
    if (s == "K") return Family::K;
    if (s == "J") return Family::J;
    throw Error("unknown family name '" + s + "'");
}

std::string GenSymbol::str() const {
    std::ostringstream os;
    os << family_name(family) << "[" << level;
    if (family == Family::J) os << "," << m;
    os << ";" << a << "," << b << "]";
    return os.str();
}

int Mono::degree() const {
    int d = 0;
    for (const auto& [s, e] : f_) d += e;
    return d;
}

int Mono::parity() const {
    int p = 0;
    for (const auto& [s, e] : f_) p += s.parity * e;
    return p % 2;
}

bool operator<(const Mono& x, const Mono& y) {
    return std::lexicographical_compare(
        x.f_.begin(), x.f_.end(), y.f_.begin(), y.f_.end(),
        [](const auto& u, const auto& v) {
            if (u.first != v.first) return u.first < v.first;
            return u.second < v.second;
        });
}

std::pair<Mono, int> Mono::mul(const Mono& x, const Mono& y) {
    // Koszul sign: each odd factor of y that moves left past a strictly
    // greater odd factor of x flips the sign. Odd factors have exponent 1.
    int flips = 0;
    for (const auto& [sy, ey] : y.f_) {
        if (!(sy.parity & 1)) continue;
        for (const auto& [sx, ex] : x.f_) {
            if ((sx.parity & 1) && sy < sx) flips += ey * ex;
        }
    }
    Mono r;
    r.f_.reserve(x.f_.size() + y.f_.size());
    auto ix = x.f_.begin(), iy = y.f_.begin();
    while (ix != x.f_.end() || iy != y.f_.end()) {
        bool take_x;
        if (ix == x.f_.end())
            take_x = false;
        else if (iy == y.f_.end())
            take_x = true;
        else if (ix->first == iy->first) {
            if (ix->first.parity & 1) return {Mono(), 0};  // odd square
            r.f_.push_back({ix->first, ix->second + iy->second});
            ++ix;
            ++iy;
            continue;
        } else
            take_x = ix->first < iy->first;
        r.f_.push_back(take_x ? *ix++ : *iy++);
    }
    return {r, flips % 2 ? -1 : 1};
}

std::pair<Mono, int> Mono::normalize(const std::vector<GenSymbol>& seq) {
    Mono acc;
    int sign = 1;
    for (const auto& s : seq) {
        auto [m, sg] = Mono::mul(acc, Mono(s));
        if (sg == 0) return {Mono(), 0};
        acc = m;
        sign *= sg;
    }
    return {acc, sign};
}

std::string Mono::str() const {
    if (f_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, e] : f_) {
        if (!first) os << "*";
        first = false;
        os << s.str();
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

const Rat& Poly::coeff(const Mono& m) const {
    static const Rat zero(0);
    auto it = t_.find(m);
    return it == t_.end() ? zero : it->second;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            auto [m, sg] = Mono::mul(ma, mb);
            if (sg == 0) continue;
            r.add_term(m, sg < 0 ? -(ca * cb) : ca * cb);
        }
    return r;
}

Poly operator*(const Rat& s, const Poly& p) {
    Poly r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : p.t_) r.t_.emplace(m, s * c);
    return r;
}

bool Poly::homogeneous_parity(int& parity_out) const {
    parity_out = 0;
    bool first = true;
    for (const auto& [m, c] : t_) {
        int p = m.parity();
        if (first) {
            parity_out = p;
            first = false;
        } else if (p != parity_out)
            return false;
    }
    return true;
}

Poly Poly::substituted(const std::function<Poly(const GenSymbol&)>& fn) const {
    Poly r;
    for (const auto& [m, c] : t_) {
        Poly acc(c);
        for (const auto& [s, e] : m.factors()) {
            Poly img = fn(s);
            for (int i = 0; i < e; ++i) acc = acc * img;
        }
        r += acc;
    }
    return r;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (!m.is_constant()) os << "*" << m.str();
    }
    return os.str();
}

}  // namespace superw
