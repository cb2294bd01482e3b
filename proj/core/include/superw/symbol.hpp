#pragma once

#include <compare>
#include <string>
#include <tuple>

#include "superw/grading.hpp"

namespace superw {

/// Generator families. Lambda sorts strictly first so that soldering
/// parameters sit leftmost in every canonical monomial.
enum class Family : int {
    Lambda = 0,
    W = 1,
    WbarMinus = 2,
    WbarPlus = 3,
    T = 4,
    S = 5,
    K = 6,
    J = 7,
};

std::string family_name(Family f);
Family family_from_name(const std::string& s);

/// An indexed, parity-carrying generator. level is the mode/spin index,
/// (a,b) the gl(M|N) indices, m the extra weight (J family only, 0 otherwise).
struct GenSymbol {
    Family family = Family::W;
    int level = 0;
    int a = 1;
    int b = 1;
    int m = 0;
    int parity = 0;  // [a]+[b] mod 2, fixed at construction

    GenSymbol() = default;
    GenSymbol(Family f, int lvl, int a_, int b_, const GradedDim& d, int m_ = 0)
        : family(f), level(lvl), a(a_), b(b_), m(m_), parity((d.parity(a_) + d.parity(b_)) % 2) {}
    GenSymbol(Family f, int lvl, int a_, int b_, int par, int m_)
        : family(f), level(lvl), a(a_), b(b_), m(m_), parity(par) {}

    auto key() const { return std::tie(family, level, a, b, m); }
    friend bool operator==(const GenSymbol& x, const GenSymbol& y) { return x.key() == y.key(); }
    friend bool operator!=(const GenSymbol& x, const GenSymbol& y) { return x.key() != y.key(); }
    friend bool operator<(const GenSymbol& x, const GenSymbol& y) { return x.key() < y.key(); }

    std::string str() const;
};

}  // namespace superw
