#include "trunczeta/table.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "trunczeta/dirichlet.hpp"
#include "trunczeta/enumerate.hpp"
#include "trunczeta/volume.hpp"

namespace trunczeta {

CountMethod count_method_from_string(const std::string& s) {
    if (s == "enum" || s == "enumeration") return CountMethod::enumeration;
    if (s == "cells") return CountMethod::cells;
    if (s == "formula") return CountMethod::formula;
    throw std::invalid_argument("unknown method: " + s);
}

std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::enumeration: return "enumeration";
        case CountMethod::cells: return "cells";
        case CountMethod::formula: return "formula";
    }
    return "";
}

CountTable make_count_table(long prime, int max_exponent, CountMethod method, long budget) {
    CountTable t;
    t.prime = prime;
    Int p(prime);

    std::vector<Int> sub, coc;
    switch (method) {
        case CountMethod::enumeration:
            for (int m = 0; m <= max_exponent; ++m) {
                sub.push_back(count_subrings(p, m, budget));
                coc.push_back(count_cocyclic(p, m, budget));
            }
            break;
        case CountMethod::cells:
            sub = local_series_via_cells(p, max_exponent);
            for (int m = 0; m <= max_exponent; ++m) coc.push_back(count_cocyclic(p, m, budget));
            break;
        case CountMethod::formula:
            sub = local_coefficients(p, CountKind::subring, max_exponent);
            coc = local_coefficients(p, CountKind::cocyclic, max_exponent);
            break;
    }

    for (int m = 0; m <= max_exponent; ++m)
        t.rows.push_back({m, sub[static_cast<size_t>(m)], coc[static_cast<size_t>(m)],
                          to_string(method)});
    return t;
}

std::string table_to_json(const CountTable& t) {
    nlohmann::json j;
    j["prime"] = t.prime;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json r;
        r["m"] = row.m;
        r["subrings"] = row.subrings.get_str();
        r["cocyclic"] = row.cocyclic.get_str();
        r["method"] = row.method;
        j["rows"].push_back(r);
    }
    return j.dump(2) + "\n";
}

CountTable table_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CountTable t;
    t.prime = j.at("prime").get<long>();
    for (const auto& r : j.at("rows")) {
        CountTable::Row row;
        row.m = r.at("m").get<int>();
        row.subrings = Int(r.at("subrings").get<std::string>());
        row.cocyclic = Int(r.at("cocyclic").get<std::string>());
        row.method = r.at("method").get<std::string>();
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string table_to_csv(const CountTable& t) {
    std::ostringstream os;
    os << "prime,m,subrings,cocyclic,method\n";
    for (const auto& row : t.rows)
        os << t.prime << "," << row.m << "," << row.subrings.get_str() << ","
           << row.cocyclic.get_str() << "," << row.method << "\n";
    return os.str();
}

}  // namespace trunczeta
