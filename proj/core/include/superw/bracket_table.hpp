#pragma once

#include <set>

#include "superw/polynomial.hpp"

namespace superw {

/// Bracket table on a finite generator set. Each unordered pair is stored
/// once under canonical symbol order; the graded-antisymmetric image
/// {y,x} = -(-1)^{[x][y]}{x,y} is produced on lookup, so antisymmetry holds
/// by construction. Pairs of covered generators without an entry bracket to
/// zero; generators outside the domain raise UncoveredPairError.
class BracketTable {
public:
    BracketTable() = default;

    void add_generator(const GenSymbol& x) { domain_.insert(x); }
    const std::set<GenSymbol>& domain() const { return domain_; }
    bool covers(const GenSymbol& x) const { return domain_.count(x) > 0; }
    std::size_t entry_count() const { return e_.size(); }

    /// Records {x,y} = p (either orientation accepted).
    void set(const GenSymbol& x, const GenSymbol& y, const Poly& p);

    /// Records {x,y} = p and, if the canonical orientation was set before,
    /// verifies consistency instead of overwriting. Returns false on clash.
    bool set_checked(const GenSymbol& x, const GenSymbol& y, const Poly& p);

    Poly bracket(const GenSymbol& x, const GenSymbol& y) const;

    const std::map<std::pair<GenSymbol, GenSymbol>, Poly>& entries() const { return e_; }

private:
    std::set<GenSymbol> domain_;
    std::map<std::pair<GenSymbol, GenSymbol>, Poly> e_;
};

}  // namespace superw
