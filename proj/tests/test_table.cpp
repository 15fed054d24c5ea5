#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trunczeta/table.hpp"

using namespace trunczeta;

TEST_CASE("count tables agree across methods") {
    auto by_enum = make_count_table(3, 5, CountMethod::enumeration);
    auto by_cells = make_count_table(3, 5, CountMethod::cells);
    auto by_formula = make_count_table(3, 5, CountMethod::formula);
    REQUIRE(by_enum.rows.size() == 6);
    for (size_t i = 0; i < by_enum.rows.size(); ++i) {
        CHECK(by_enum.rows[i].subrings == by_cells.rows[i].subrings);
        CHECK(by_enum.rows[i].subrings == by_formula.rows[i].subrings);
        CHECK(by_enum.rows[i].cocyclic == by_formula.rows[i].cocyclic);
    }
    CHECK(by_enum.rows[2].subrings == 13);
    CHECK(by_enum.rows[2].cocyclic == 9);
    CHECK(by_enum.rows[0].method == "enumeration");
}

TEST_CASE("json round trip is byte identical") {
    auto t = make_count_table(2, 6, CountMethod::enumeration);
    std::string emitted = table_to_json(t);
    CountTable parsed = table_from_json(emitted);
    CHECK(table_to_json(parsed) == emitted);
    CHECK(parsed.prime == 2);
    CHECK(parsed.rows.size() == 7);
    CHECK(parsed.rows[6].subrings == 427);
}

TEST_CASE("csv format") {
    auto t = make_count_table(2, 2, CountMethod::enumeration);
    std::string csv = table_to_csv(t);
    CHECK(csv ==
          "prime,m,subrings,cocyclic,method\n"
          "2,0,1,1,enumeration\n"
          "2,1,1,1,enumeration\n"
          "2,2,7,4,enumeration\n");
}

TEST_CASE("method names") {
    CHECK(count_method_from_string("enum") == CountMethod::enumeration);
    CHECK(count_method_from_string("cells") == CountMethod::cells);
    CHECK(count_method_from_string("formula") == CountMethod::formula);
    CHECK_THROWS_AS(count_method_from_string("magic"), std::invalid_argument);
}
