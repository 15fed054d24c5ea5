#pragma once

#include <string>
#include <vector>

#include "trunczeta/exact.hpp"

namespace trunczeta {

enum class CountMethod { enumeration, cells, formula };

CountMethod count_method_from_string(const std::string& s);
std::string to_string(CountMethod m);

// Per-prime, per-exponent subring and cocyclic counts with provenance.
struct CountTable {
    long prime = 0;
    struct Row {
        int m;
        Int subrings;
        Int cocyclic;
        std::string method;
    };
    std::vector<Row> rows;
};

// methods: enumeration = residue loops; cells = p^{2k+l} * mu volumes for
// subrings (cocyclic stays cell enumeration); formula = series of the
// enumeration-verified rational forms
CountTable make_count_table(long prime, int max_exponent, CountMethod method,
                            long budget = default_budget());

// {"prime": int, "rows": [{"m": int, "subrings": str, "cocyclic": str,
//  "method": str}]}; counts as decimal strings
std::string table_to_json(const CountTable& t);
CountTable table_from_json(const std::string& text);

// header row prime,m,subrings,cocyclic,method
std::string table_to_csv(const CountTable& t);

}  // namespace trunczeta
