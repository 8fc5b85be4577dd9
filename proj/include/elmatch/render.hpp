#pragma once

#include <string>

#include "elmatch/matchmaker.hpp"

namespace elmatch {

enum class OutputFormat { Tsv, Json };

// Serializes a ranking. Both formats are byte-deterministic for a given
// result. Tsv: a 'rank\tname\tscore' header, one row per ranked offer with
// the exact score ('2' or '5/2'), then one '# excluded: NAME' comment line
// per filtered offer and, when with_trace is set, one '# trace' comment line
// per scored pair and component. Json: an object with 'ranked' and
// 'excluded' arrays plus, when with_trace is set, the 'trace' array carrying
// each pair's votes and evidence.
std::string render_ranking(const RankingResult& result, OutputFormat format,
                           bool with_trace);

}  // namespace elmatch
