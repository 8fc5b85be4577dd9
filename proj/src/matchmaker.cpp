#include "elmatch/matchmaker.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "elmatch/diagnostics.hpp"
#include "elmatch/inference.hpp"

namespace elmatch {

std::map<std::string, ConceptRef> to_component_form(const ConceptRef& description,
                                                    const Reasoner& reasoner) {
  ensure_simple(description);
  const Ontology& ontology = reasoner.ontology();
  ConceptRef canon = canonicalize(description);
  std::map<std::string, ConceptRef> fillers;
  for (const auto& conjunct : top_level_conjuncts(canon)) {
    if (conjunct->kind() != ConceptKind::Some) {
      throw Error(ErrorCode::NonComponentConjunct,
                  "conjunct " + render(conjunct) +
                      " is not an existential over a component role");
    }
    const ComponentDecl* decl = ontology.find_component(conjunct->role());
    if (decl == nullptr) {
      throw Error(ErrorCode::NonComponentConjunct,
                  "role " + conjunct->role() + " is not a declared component role");
    }
    if (fillers.count(decl->role) != 0) {
      throw Error(ErrorCode::DuplicateComponent,
                  "component role " + decl->role + " appears in two conjuncts");
    }
    const ConceptRef& filler = conjunct->filler();
    if (!filler->is_top()) {
      ConceptRef top_concept = ConceptExpr::atom(decl->top_concept);
      // Descriptions routinely spell out a component member by its features
      // instead of naming a subclass of the component top, so only an
      // outright contradiction with the top concept is rejected.
      if (!reasoner.subsumes(filler, top_concept) &&
          !reasoner.satisfiable(ConceptExpr::conj({filler, top_concept}))) {
        throw Error(ErrorCode::ComponentRangeViolated,
                    "filler " + render(filler) + " contradicts component top " +
                        decl->top_concept);
      }
    }
    fillers[decl->role] = reduce(filler, reasoner);
  }
  for (const auto& decl : ontology.components()) {
    if (fillers.count(decl.role) == 0) fillers[decl.role] = ConceptExpr::top();
  }
  return fillers;
}

PartyRecord make_party(std::string name, PartyKind kind, const ConceptRef& description,
                       const Reasoner& reasoner) {
  PartyRecord record;
  record.name = std::move(name);
  record.kind = kind;
  record.fillers = to_component_form(description, reasoner);
  return record;
}

bool component_existing(const PartyRecord& party, const std::string& role,
                        const Reasoner& reasoner) {
  if (reasoner.ontology().find_component(role) == nullptr) {
    throw Error(ErrorCode::UnknownSymbol, "role " + role + " is not a component role");
  }
  auto it = party.fillers.find(role);
  if (it == party.fillers.end() || it->second->is_top()) return false;
  // Semantic test: a filler the ontology forces up to Top counts as absent.
  return !reasoner.subsumes(ConceptExpr::top(), it->second);
}

bool is_recommendation(const PartyRecord& offer, const PartyRecord& demand,
                       const Reasoner& reasoner) {
  for (const auto& decl : reasoner.ontology().components()) {
    if (component_existing(offer, decl.role, reasoner) &&
        component_existing(demand, decl.role, reasoner)) {
      return true;
    }
  }
  return false;
}

const char* zone_name(Zone zone) {
  switch (zone) {
    case Zone::Equivalent:
      return "equivalent";
    case Zone::MorePrecise:
      return "more-precise";
    case Zone::LessPrecise:
      return "less-precise";
    case Zone::Distant:
      return "distant";
  }
  return "distant";
}

Zone zone_of(const ConceptRef& offer_proj, const ConceptRef& demand_proj,
             const Reasoner& reasoner) {
  const bool below = reasoner.subsumes(offer_proj, demand_proj);
  const bool above = reasoner.subsumes(demand_proj, offer_proj);
  if (below && above) return Zone::Equivalent;
  if (below) return Zone::MorePrecise;
  if (above) return Zone::LessPrecise;
  return Zone::Distant;
}

ComponentEvidence evaluate_component(const ConceptRef& demand_proj,
                                     const ConceptRef& offer_proj,
                                     const Reasoner& reasoner) {
  ComponentEvidence evidence;
  ConceptRef demand_reduced = reduce(demand_proj, reasoner);
  ConceptRef offer_reduced = reduce(offer_proj, reasoner);
  evidence.zone = zone_of(offer_reduced, demand_reduced, reasoner);
  ConceptRef shared = lcs(demand_reduced, offer_reduced, reasoner);
  evidence.rest = semantic_difference(demand_reduced, shared, reasoner);
  evidence.miss = semantic_difference(offer_reduced, shared, reasoner);
  return evidence;
}

namespace {

// Shared residue tie-break: the more general residue wins outright; between
// equivalent or incomparable residues the syntactically shorter one wins.
int compare_residue(const ConceptRef& left, const ConceptRef& right,
                    const Reasoner& reasoner) {
  if (equal(left, right)) return 0;
  const bool le = reasoner.subsumes(left, right);
  const bool ge = reasoner.subsumes(right, left);
  if (le && !ge) return -1;
  if (ge && !le) return 1;
  const std::size_t ln = syntactic_length(left);
  const std::size_t rn = syntactic_length(right);
  if (ln > rn) return -1;
  if (ln < rn) return 1;
  return 0;
}

}  // namespace

int phi_from_evidence(const ComponentEvidence& left, const ComponentEvidence& right,
                      const Reasoner& reasoner) {
  switch (left.zone) {
    case Zone::Equivalent:
      return right.zone == Zone::Equivalent ? 0 : 1;
    case Zone::MorePrecise:
      if (right.zone == Zone::MorePrecise)
        return compare_residue(left.miss, right.miss, reasoner);
      return right.zone == Zone::Equivalent ? -1 : 1;
    case Zone::LessPrecise:
      if (right.zone == Zone::LessPrecise)
        return compare_residue(left.rest, right.rest, reasoner);
      if (right.zone == Zone::Equivalent || right.zone == Zone::MorePrecise) return -1;
      return 1;
    case Zone::Distant:
      break;
  }
  if (right.zone != Zone::Distant) return -1;
  if (int by_rest = compare_residue(left.rest, right.rest, reasoner); by_rest != 0) {
    return by_rest;
  }
  return compare_residue(left.miss, right.miss, reasoner);
}

namespace {

ConceptRef filler_or_top(const PartyRecord& party, const std::string& role) {
  auto it = party.fillers.find(role);
  return it == party.fillers.end() ? ConceptExpr::top() : it->second;
}

}  // namespace

int phi(const std::string& role, const Reasoner& reasoner, const PartyRecord& demand,
        const PartyRecord& left, const PartyRecord& right) {
  if (reasoner.ontology().find_component(role) == nullptr) {
    throw Error(ErrorCode::UnknownSymbol, "role " + role + " is not a component role");
  }
  ConceptRef demand_proj = filler_or_top(demand, role);
  ComponentEvidence left_evidence =
      evaluate_component(demand_proj, filler_or_top(left, role), reasoner);
  ComponentEvidence right_evidence =
      evaluate_component(demand_proj, filler_or_top(right, role), reasoner);
  return phi_from_evidence(left_evidence, right_evidence, reasoner);
}

void WeightTable::set(const std::string& role, const Rational& weight) {
  if (weight <= Rational(0)) {
    throw Error(ErrorCode::InvalidArgument,
                "weight for " + role + " must be positive, got " + to_string(weight));
  }
  weights_[role] = weight;
}

Rational WeightTable::weight_for(const std::string& role) const {
  auto it = weights_.find(role);
  return it == weights_.end() ? Rational(1) : it->second;
}

namespace {

void check_distinct_names(const std::vector<std::string>& names) {
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::DuplicateOfferName, "offer name " + name + " repeats");
    }
  }
}

}  // namespace

std::map<std::string, Rational> concordance_scores(
    const std::vector<std::string>& offer_names,
    const std::vector<std::string>& component_roles, const WeightTable& weights,
    const PairComparator& compare) {
  check_distinct_names(offer_names);
  std::vector<Rational> scores(offer_names.size(), Rational(0));
  for (std::size_t i = 0; i < offer_names.size(); ++i) {
    for (std::size_t j = i + 1; j < offer_names.size(); ++j) {
      for (const auto& role : component_roles) {
        const Rational traded = weights.weight_for(role) * compare(role, i, j);
        scores[i] += traded;
        scores[j] -= traded;
      }
    }
  }
  std::map<std::string, Rational> by_name;
  for (std::size_t i = 0; i < offer_names.size(); ++i) by_name[offer_names[i]] = scores[i];
  return by_name;
}

namespace {

std::vector<std::string> component_roles_of(const Ontology& ontology) {
  std::vector<std::string> roles;
  roles.reserve(ontology.components().size());
  for (const auto& decl : ontology.components()) roles.push_back(decl.role);
  return roles;
}

// Evidence for every (offer, component) against the demand, computed once;
// the pairwise comparisons all read from here.
std::vector<std::vector<ComponentEvidence>> evidence_table(
    const PartyRecord& demand, const std::vector<PartyRecord>& offers,
    const std::vector<std::string>& roles, const Reasoner& reasoner) {
  std::vector<std::vector<ComponentEvidence>> table(offers.size());
  for (std::size_t i = 0; i < offers.size(); ++i) {
    table[i].reserve(roles.size());
    for (const auto& role : roles) {
      table[i].push_back(evaluate_component(filler_or_top(demand, role),
                                            filler_or_top(offers[i], role), reasoner));
    }
  }
  return table;
}

}  // namespace

std::map<std::string, Rational> concordance_scores(const PartyRecord& demand,
                                                   const std::vector<PartyRecord>& offers,
                                                   const WeightTable& weights,
                                                   const Reasoner& reasoner) {
  const std::vector<std::string> roles = component_roles_of(reasoner.ontology());
  const auto evidence = evidence_table(demand, offers, roles, reasoner);
  std::unordered_map<std::string, std::size_t> role_index;
  for (std::size_t k = 0; k < roles.size(); ++k) role_index[roles[k]] = k;
  std::vector<std::string> names;
  names.reserve(offers.size());
  for (const auto& offer : offers) names.push_back(offer.name);
  const PairComparator compare = [&](const std::string& role, std::size_t i,
                                     std::size_t j) {
    const std::size_t k = role_index.at(role);
    return phi_from_evidence(evidence[i][k], evidence[j][k], reasoner);
  };
  return concordance_scores(names, roles, weights, compare);
}

RankingResult rank(const PartyRecord& demand, const std::vector<PartyRecord>& offers,
                   const WeightTable& weights, const Reasoner& reasoner) {
  if (demand.kind != PartyKind::Demand) {
    throw Error(ErrorCode::InvalidArgument, demand.name + " is not a demand");
  }
  std::vector<std::string> all_names;
  all_names.reserve(offers.size());
  for (const auto& offer : offers) {
    if (offer.kind != PartyKind::Offer) {
      throw Error(ErrorCode::InvalidArgument, offer.name + " is not an offer");
    }
    all_names.push_back(offer.name);
  }
  check_distinct_names(all_names);

  RankingResult result;
  std::vector<PartyRecord> admitted;
  for (const auto& offer : offers) {
    if (is_recommendation(offer, demand, reasoner)) {
      admitted.push_back(offer);
    } else {
      result.excluded.push_back(offer.name);
    }
  }
  std::sort(result.excluded.begin(), result.excluded.end());
  // Name order makes scoring and tracing independent of input order.
  std::sort(admitted.begin(), admitted.end(),
            [](const PartyRecord& a, const PartyRecord& b) { return a.name < b.name; });

  const std::vector<std::string> roles = component_roles_of(reasoner.ontology());
  const auto evidence = evidence_table(demand, admitted, roles, reasoner);

  std::vector<Rational> scores(admitted.size(), Rational(0));
  for (std::size_t i = 0; i < admitted.size(); ++i) {
    for (std::size_t j = i + 1; j < admitted.size(); ++j) {
      for (std::size_t k = 0; k < roles.size(); ++k) {
        const int vote = phi_from_evidence(evidence[i][k], evidence[j][k], reasoner);
        const Rational traded = weights.weight_for(roles[k]) * vote;
        scores[i] += traded;
        scores[j] -= traded;
        PairTrace trace;
        trace.left = admitted[i].name;
        trace.right = admitted[j].name;
        trace.component = roles[k];
        trace.phi = vote;
        trace.left_evidence = evidence[i][k];
        trace.right_evidence = evidence[j][k];
        result.trace.push_back(std::move(trace));
      }
    }
  }

  std::vector<std::size_t> order(admitted.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return admitted[a].name < admitted[b].name;
  });
  result.ranked.reserve(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    RankedRow row;
    row.name = admitted[order[pos]].name;
    row.score = scores[order[pos]];
    row.rank = (pos > 0 && row.score == result.ranked.back().score)
                   ? result.ranked.back().rank
                   : static_cast<int>(pos + 1);
    result.ranked.push_back(std::move(row));
  }
  return result;
}

}  // namespace elmatch
