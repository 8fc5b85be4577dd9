#include "elmatch/render.hpp"

#include <json.hpp>

namespace elmatch {
namespace {

std::string render_tsv(const RankingResult& result, bool with_trace) {
  std::string out = "rank\tname\tscore\n";
  for (const auto& row : result.ranked) {
    out += std::to_string(row.rank);
    out += '\t';
    out += row.name;
    out += '\t';
    out += to_string(row.score);
    out += '\n';
  }
  for (const auto& name : result.excluded) {
    out += "# excluded: ";
    out += name;
    out += '\n';
  }
  if (with_trace) {
    for (const auto& entry : result.trace) {
      out += "# trace\t";
      out += entry.left;
      out += '\t';
      out += entry.right;
      out += '\t';
      out += entry.component;
      out += '\t';
      out += std::to_string(entry.phi);
      for (const ComponentEvidence* side : {&entry.left_evidence, &entry.right_evidence}) {
        out += '\t';
        out += zone_name(side->zone);
        out += '\t';
        out += render(side->rest);
        out += '\t';
        out += render(side->miss);
      }
      out += '\n';
    }
  }
  return out;
}

nlohmann::ordered_json evidence_json(const ComponentEvidence& evidence) {
  return {{"zone", zone_name(evidence.zone)},
          {"rest", render(evidence.rest)},
          {"miss", render(evidence.miss)}};
}

std::string render_json(const RankingResult& result, bool with_trace) {
  nlohmann::ordered_json doc;
  doc["ranked"] = nlohmann::ordered_json::array();
  for (const auto& row : result.ranked) {
    doc["ranked"].push_back(
        {{"rank", row.rank}, {"name", row.name}, {"score", to_string(row.score)}});
  }
  doc["excluded"] = result.excluded;
  if (with_trace) {
    doc["trace"] = nlohmann::ordered_json::array();
    for (const auto& entry : result.trace) {
      doc["trace"].push_back({{"pair", {entry.left, entry.right}},
                              {"component", entry.component},
                              {"phi", entry.phi},
                              {"left", evidence_json(entry.left_evidence)},
                              {"right", evidence_json(entry.right_evidence)}});
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render_ranking(const RankingResult& result, OutputFormat format,
                           bool with_trace) {
  return format == OutputFormat::Tsv ? render_tsv(result, with_trace)
                                     : render_json(result, with_trace);
}

}  // namespace elmatch
