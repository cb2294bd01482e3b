#include "superw/table_io.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "superw/version.hpp"

namespace superw {

using json = nlohmann::ordered_json;

namespace {

json symbol_to_json(const GenSymbol& s) {
    json j;
    j["family"] = family_name(s.family);
    j["level"] = s.level;
    if (s.family == Family::J) j["m"] = s.m;
    j["a"] = s.a;
    j["b"] = s.b;
    return j;
}

GenSymbol symbol_from_json(const json& j, const GradedDim& d) {
    Family f = family_from_name(j.at("family").get<std::string>());
    int m = j.contains("m") ? j.at("m").get<int>() : 0;
    return GenSymbol(f, j.at("level").get<int>(), j.at("a").get<int>(), j.at("b").get<int>(), d, m);
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& [mono, c] : p.terms()) {
        json term;
        term["coeff"] = c.str();
        json syms = json::array();
        for (const auto& [s, e] : mono.factors())
            for (int i = 0; i < e; ++i) syms.push_back(symbol_to_json(s));
        term["monomial"] = syms;
        arr.push_back(term);
    }
    return arr;
}

Poly poly_from_json(const json& arr, const GradedDim& d) {
    Poly p;
    for (const auto& term : arr) {
        Rat c = Rat::parse(term.at("coeff").get<std::string>());
        std::vector<GenSymbol> seq;
        for (const auto& sj : term.at("monomial")) seq.push_back(symbol_from_json(sj, d));
        auto [mono, sign] = Mono::normalize(seq);
        if (sign == 0) throw Error("table_from_json: zero monomial in document");
        p.add_term(mono, sign < 0 ? -c : c);
    }
    return p;
}

}  // namespace

std::string table_to_json(const BracketTable& t, const DocumentMeta& meta) {
    json doc;
    doc["suite"] = meta.suite;
    doc["M"] = meta.M;
    doc["N"] = meta.N;
    doc["p"] = meta.p;
    doc["version"] = SUPERW_VERSION;
    json entries = json::array();
    for (const auto& [xy, poly] : t.entries()) {
        json e;
        e["lhs"] = symbol_to_json(xy.first);
        e["rhs"] = symbol_to_json(xy.second);
        e["bracket"] = poly_to_json(poly);
        entries.push_back(e);
    }
    doc["entries"] = entries;
    return doc.dump(2) + "\n";
}

ParsedTable table_from_json(const std::string& text) {
    json doc = json::parse(text);
    ParsedTable out;
    out.meta.suite = doc.at("suite").get<std::string>();
    out.meta.M = doc.at("M").get<int>();
    out.meta.N = doc.at("N").get<int>();
    out.meta.p = doc.at("p").get<int>();
    GradedDim d(out.meta.M, out.meta.N);
    for (const auto& e : doc.at("entries")) {
        GenSymbol lhs = symbol_from_json(e.at("lhs"), d);
        GenSymbol rhs = symbol_from_json(e.at("rhs"), d);
        out.table.set(lhs, rhs, poly_from_json(e.at("bracket"), d));
    }
    return out;
}

std::string clebsch_to_json(const ClebschTable& cg) {
    json doc;
    doc["suite"] = "clebsch";
    doc["p"] = cg.p();
    doc["version"] = SUPERW_VERSION;
    json eta = json::array();
    for (int j = 0; j < cg.p(); ++j) eta.push_back(cg.eta(j).str());
    doc["eta"] = eta;
    bool swap_ok = true;
    json entries = json::array();
    for (const auto& [key, val] : cg.entries()) {
        auto [j, m, k, l, r, s] = key;
        json e;
        e["j"] = j;
        e["m"] = m;
        e["k"] = k;
        e["l"] = l;
        e["r"] = r;
        e["s"] = s;
        e["value"] = val.str();
        entries.push_back(e);
        Rat swapped = cg.cg(k, l, j, m, r, s);
        Rat expect = ((j + k + r) % 2) ? -swapped : swapped;
        if (val != expect) swap_ok = false;
    }
    doc["swap_symmetry_ok"] = swap_ok;
    doc["entries"] = entries;
    return doc.dump(2) + "\n";
}

void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot open " + tmp + " for writing");
        f << content;
        if (!f.flush()) throw Error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("cannot rename into " + path);
}

}  // namespace superw
