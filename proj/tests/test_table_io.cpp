#include "doctest.h"

#include <cstdlib>
#include <fstream>

#include "superw/solder.hpp"
#include "superw/table_io.hpp"

using namespace superw;

TEST_CASE("table documents round-trip losslessly") {
    GradedDim d(1, 1);
    ClebschTable cg(2);
    SolderState st = solve_lambda(d, 2, cg);
    BracketTable wt = solder_brackets(st);

    DocumentMeta meta{"solder", 1, 1, 2};
    std::string text = table_to_json(wt, meta);
    ParsedTable parsed = table_from_json(text);
    CHECK(parsed.meta.suite == "solder");
    CHECK(parsed.meta.p == 2);
    CHECK(parsed.table.entries().size() == wt.entries().size());
    for (const auto& [xy, poly] : wt.entries())
        CHECK(parsed.table.bracket(xy.first, xy.second) == poly);

    // serialization is canonical: re-serializing the parse is byte-identical
    CHECK(table_to_json(parsed.table, parsed.meta) == text);
}

TEST_CASE("document bytes are independent of the thread count") {
    auto render = [] {
        GradedDim d(2, 1);
        ClebschTable cg(2);
        BracketTable wt = solder_brackets(solve_lambda(d, 2, cg));
        return table_to_json(wt, DocumentMeta{"solder", 2, 1, 2});
    };
    setenv("SUPERW_THREADS", "1", 1);
    std::string one = render();
    setenv("SUPERW_THREADS", "7", 1);
    std::string seven = render();
    unsetenv("SUPERW_THREADS");
    CHECK(one == seven);
}

TEST_CASE("clebsch document") {
    ClebschTable cg1(1);
    std::string doc1 = clebsch_to_json(cg1);
    CHECK(doc1.find("\"p\": 1") != std::string::npos);
    CHECK(doc1.find("\"swap_symmetry_ok\": true") != std::string::npos);

    ClebschTable cg2(2);
    std::string doc2 = clebsch_to_json(cg2);
    // contains <1,-1;1,1|0,0> = -1
    CHECK(doc2.find("\"value\": \"-1/1\"") != std::string::npos);
}

TEST_CASE("atomic write") {
    std::string path = "/tmp/superw_test_atomic.json";
    write_atomic(path, "{\"ok\": true}\n");
    std::ifstream f(path);
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(content == "{\"ok\": true}\n");
    std::remove(path.c_str());
}
