#pragma once

#include <string>

#include "surfenum/series.hpp"

namespace surfenum {

// JSON form used on disk and by the CLI:
//   {"vars": ["y","u"], "truncation": N,
//    "terms": [[e1,...,ek,"num/den"], ...]}   (terms sorted lexicographically)
std::string series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& json_text);

}  // namespace surfenum
