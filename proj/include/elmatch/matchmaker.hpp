#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "elmatch/concept.hpp"
#include "elmatch/rational.hpp"
#include "elmatch/reasoner.hpp"

namespace elmatch {

enum class PartyKind { Offer, Demand };

// An offer or a demand in component form: one filler per declared component
// role, Top where the description says nothing about a component.
struct PartyRecord {
  std::string name;
  PartyKind kind = PartyKind::Offer;
  std::map<std::string, ConceptRef> fillers;
};

// Splits a description into its per-component fillers. Every top-level
// conjunct must be an existential over a declared component role; fillers
// come back reduced, and roles the description does not mention map to Top.
// Throws Error{NonComponentConjunct} for any other conjunct shape,
// Error{DuplicateComponent} when a role occurs twice (merging the fillers
// would strengthen the description, so it is refused), and
// Error{ComponentRangeViolated} when a filler contradicts the component's
// top concept.
std::map<std::string, ConceptRef> to_component_form(const ConceptRef& description,
                                                    const Reasoner& reasoner);

PartyRecord make_party(std::string name, PartyKind kind, const ConceptRef& description,
                       const Reasoner& reasoner);

// A component is existing when its filler says anything at all, i.e. is not
// equivalent to Top under the ontology. Throws Error{UnknownSymbol} when the
// role is not a declared component role.
bool component_existing(const PartyRecord& party, const std::string& role,
                        const Reasoner& reasoner);

// An offer is worth ranking only when it constrains at least one component
// the demand also constrains.
bool is_recommendation(const PartyRecord& offer, const PartyRecord& demand,
                       const Reasoner& reasoner);

// Position of an offer projection relative to the demand projection.
enum class Zone { Equivalent, MorePrecise, LessPrecise, Distant };

const char* zone_name(Zone zone);

Zone zone_of(const ConceptRef& offer_proj, const ConceptRef& demand_proj,
             const Reasoner& reasoner);

// Everything the per-component comparator looks at: the zone plus the two
// residues. rest is the demand part the offer leaves unmet; miss is the
// offer-side surplus the demand never asked for.
struct ComponentEvidence {
  Zone zone = Zone::Distant;
  ConceptRef rest;
  ConceptRef miss;
};

ComponentEvidence evaluate_component(const ConceptRef& demand_proj,
                                     const ConceptRef& offer_proj,
                                     const Reasoner& reasoner);

// Semantic pairwise comparator for one component: +1 when the left offer
// fits the demand better, -1 for the right, 0 for a tie. Zones order
// Equivalent > MorePrecise > LessPrecise > Distant; inside a shared zone the
// residues break ties (general beats specific, then short beats long).
int phi_from_evidence(const ComponentEvidence& left, const ComponentEvidence& right,
                      const Reasoner& reasoner);

int phi(const std::string& role, const Reasoner& reasoner, const PartyRecord& demand,
        const PartyRecord& left, const PartyRecord& right);

// Per-component multipliers applied when aggregating comparator votes.
// Unlisted roles weigh 1; listed weights must be positive.
class WeightTable {
 public:
  // Throws Error{InvalidArgument} when the weight is not positive.
  void set(const std::string& role, const Rational& weight);
  Rational weight_for(const std::string& role) const;
  const std::map<std::string, Rational>& entries() const { return weights_; }

 private:
  std::map<std::string, Rational> weights_;
};

// Votes for one component between the offers at two indices: +1, 0, or -1
// from the left index's point of view.
using PairComparator =
    std::function<int(const std::string& component_role, std::size_t left_index,
                      std::size_t right_index)>;

// Relative-concordance aggregation: every unordered pair trades
// weight * vote points, so the scores always sum to zero. The comparator
// parameter keeps this usable with non-semantic votes as well.
// Throws Error{DuplicateOfferName} on repeated names.
std::map<std::string, Rational> concordance_scores(
    const std::vector<std::string>& offer_names,
    const std::vector<std::string>& component_roles, const WeightTable& weights,
    const PairComparator& compare);

std::map<std::string, Rational> concordance_scores(const PartyRecord& demand,
                                                   const std::vector<PartyRecord>& offers,
                                                   const WeightTable& weights,
                                                   const Reasoner& reasoner);

struct RankedRow {
  int rank = 0;
  std::string name;
  Rational score;
};

// One comparator outcome, kept for explainability: the pair is stored with
// the lexicographically smaller offer name on the left and phi given from
// that side.
struct PairTrace {
  std::string left;
  std::string right;
  std::string component;
  int phi = 0;
  ComponentEvidence left_evidence;
  ComponentEvidence right_evidence;
};

struct RankingResult {
  std::vector<RankedRow> ranked;      // score descending, names ascending on ties
  std::vector<std::string> excluded;  // non-recommendations, name ascending
  std::vector<PairTrace> trace;       // every scored pair and component
};

// Full pipeline: filter offers through is_recommendation, score the rest by
// weighted concordance, sort, and assign competition ranks (equal scores
// share a rank, the following rank skips). Deterministic for any
// permutation of the offers argument.
// Throws Error{InvalidArgument} on kind mismatches and
// Error{DuplicateOfferName} on repeated offer names.
RankingResult rank(const PartyRecord& demand, const std::vector<PartyRecord>& offers,
                   const WeightTable& weights, const Reasoner& reasoner);

}  // namespace elmatch
