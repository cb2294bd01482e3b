#pragma once

#include <string>

#include "superw/bracket_table.hpp"
#include "superw/clebsch.hpp"

namespace superw {

struct DocumentMeta {
    std::string suite;
    int M = 0;
    int N = 0;
    int p = 0;
};

/// Canonical JSON form of a bracket table. Entries are emitted in symbol
/// order, rationals as "num/den" strings; identical inputs give identical
/// bytes regardless of thread count.
std::string table_to_json(const BracketTable& t, const DocumentMeta& meta);

struct ParsedTable {
    DocumentMeta meta;
    BracketTable table;
};

ParsedTable table_from_json(const std::string& text);

/// Clebsch coefficient document: eta array, entries, and the embedded
/// swap-symmetry audit flag.
std::string clebsch_to_json(const ClebschTable& cg);

/// Write-to-temp-then-rename.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace superw
