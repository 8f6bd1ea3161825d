#include "surfenum/series_json.hpp"

#include <json.hpp>

namespace surfenum {

using nlohmann::json;

std::string series_to_json(const TruncatedSeries& s) {
    json j;
    j["vars"] = s.vars();
    j["truncation"] = s.truncation();
    json terms = json::array();
    // std::map iteration order is already lexicographic in the exponents
    for (const auto& [exps, coeff] : s.terms()) {
        json row = json::array();
        for (int e : exps) row.push_back(e);
        // coefficients always render as "num/den", even for integers
        row.push_back(coeff.get_num().get_str() + "/" + coeff.get_den().get_str());
        terms.push_back(std::move(row));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

TruncatedSeries series_from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    int truncation = j.at("truncation").get<int>();
    // convention: the progress (truncation) variable is listed first
    TruncatedSeries s(vars, 0, truncation);
    for (const auto& row : j.at("terms")) {
        if (row.size() != vars.size() + 1)
            throw DomainError("series_from_json: term row of wrong length");
        TruncatedSeries::Exponents exps(vars.size());
        for (size_t i = 0; i < vars.size(); ++i) exps[i] = row[i].get<int>();
        s.add_term(exps, rational_from_string(row[vars.size()].get<std::string>()));
    }
    return s;
}

}  // namespace surfenum
