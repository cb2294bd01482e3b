#include "superw/bracket_table.hpp"

namespace superw {

namespace {

// {y,x} = -(-1)^{[x][y]} {x,y}
Poly flip(const GenSymbol& x, const GenSymbol& y, const Poly& p) {
    return (x.parity & y.parity & 1) ? p : -p;
}

}  // namespace

void BracketTable::set(const GenSymbol& x, const GenSymbol& y, const Poly& p) {
    domain_.insert(x);
    domain_.insert(y);
    if (y < x) {
        e_[{y, x}] = flip(x, y, p);
        return;
    }
    e_[{x, y}] = p;
    // even diagonal brackets vanish identically
    if (x == y && !(x.parity & 1) && !p.is_zero())
        throw Error("BracketTable: nonzero {x,x} for even generator " + x.str());
}

bool BracketTable::set_checked(const GenSymbol& x, const GenSymbol& y, const Poly& p) {
    std::pair<GenSymbol, GenSymbol> key = y < x ? std::make_pair(y, x) : std::make_pair(x, y);
    Poly canon = y < x ? flip(x, y, p) : p;
    auto it = e_.find(key);
    if (it != e_.end()) return it->second == canon;
    domain_.insert(x);
    domain_.insert(y);
    e_[key] = canon;
    return true;
}

Poly BracketTable::bracket(const GenSymbol& x, const GenSymbol& y) const {
    if (!covers(x) || !covers(y))
        throw UncoveredPairError("uncovered pair {" + x.str() + ", " + y.str() + "}");
    if (y < x) {
        auto it = e_.find({y, x});
        return it == e_.end() ? Poly() : flip(y, x, it->second);
    }
    auto it = e_.find({x, y});
    if (it != e_.end()) return it->second;
    if (x == y && !(x.parity & 1)) return Poly();
    return Poly();
}

}  // namespace superw
