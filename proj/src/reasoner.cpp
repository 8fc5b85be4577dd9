#include "elmatch/reasoner.hpp"

#include <algorithm>
#include <cassert>

#include "elmatch/diagnostics.hpp"

namespace elmatch {

namespace {

constexpr const char* kQueryLeft = "#qc";
constexpr const char* kQueryRight = "#qd";

bool plain_name(const ConceptRef& expr) { return expr->kind() == ConceptKind::Atom; }

}  // namespace

Reasoner::Reasoner(Ontology ontology)
    : ontology_(std::move(ontology)),
      base_(normalize(ontology_)),
      base_index_(saturate(base_)) {}

void Reasoner::validate_symbols(const ConceptRef& expr) const {
  switch (expr->kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return;
    case ConceptKind::Atom:
      if (!ontology_.has_concept(expr->name())) {
        throw Error(ErrorCode::UnknownSymbol, "unknown concept name '" + expr->name() + "'");
      }
      return;
    case ConceptKind::Nominal:
      if (!ontology_.has_individual(expr->name())) {
        throw Error(ErrorCode::UnknownSymbol, "unknown individual '" + expr->name() + "'");
      }
      return;
    case ConceptKind::Some:
      if (!ontology_.has_role(expr->role())) {
        throw Error(ErrorCode::UnknownSymbol, "unknown role '" + expr->role() + "'");
      }
      validate_symbols(expr->filler());
      return;
    case ConceptKind::And:
      for (const auto& m : expr->members()) validate_symbols(m);
      return;
  }
}

bool Reasoner::subsumes(const ConceptRef& c, const ConceptRef& d) const {
  assert(c != nullptr && d != nullptr);
  validate_symbols(c);
  validate_symbols(d);
  ConceptRef left = canonicalize(c);
  ConceptRef right = canonicalize(d);
  if (right->is_top() || left->is_bottom()) return true;
  if (equal(left, right)) return true;
  if (plain_name(left) && plain_name(right)) {
    int a = base_.concept_id(left->name());
    int b = base_.concept_id(right->name());
    assert(a >= 0 && b >= 0);
    return base_index_.subsumed(a, b);
  }
  std::string key = render(left);
  key += '\t';
  render_to(*right, key);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = subsumption_cache_.find(key);
    if (it != subsumption_cache_.end()) return it->second;
  }
  bool result = subsumes_uncached(left, right);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  subsumption_cache_.emplace(std::move(key), result);
  return result;
}

bool Reasoner::subsumes_uncached(const ConceptRef& c, const ConceptRef& d) const {
  Normalizer extend(base_);
  int qc = extend.add_query_name(kQueryLeft, c);
  int qd = extend.add_query_name(kQueryRight, d);
  NormalizedAxiomSet extended = extend.take();
  ClassificationIndex index = saturate(extended);
  return index.subsumed(qc, qd);
}

bool Reasoner::equivalent(const ConceptRef& c, const ConceptRef& d) const {
  return subsumes(c, d) && subsumes(d, c);
}

bool Reasoner::strictly_subsumed(const ConceptRef& c, const ConceptRef& d) const {
  return subsumes(c, d) && !subsumes(d, c);
}

bool Reasoner::satisfiable(const ConceptRef& c) const {
  return !subsumes(c, ConceptExpr::bottom());
}

std::vector<std::string> Reasoner::minimal_named(const ClassificationIndex& index,
                                                 std::vector<int>& common) const {
  // Strictly-below test between named concepts; Bottom membership makes a
  // name below everything.
  auto below = [&](int x, int y) {
    return index.in_s(x, y) || index.in_s(x, NormalizedAxiomSet::kBottom);
  };
  std::vector<std::string> out;
  for (int x : common) {
    bool minimal = true;
    for (int y : common) {
      if (y == x) continue;
      if (below(y, x) && !below(x, y)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(base_.concept_label(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> Reasoner::min_common_named_subsumers(
    const std::vector<std::string>& names) const {
  if (names.empty()) {
    throw Error(ErrorCode::InvalidArgument, "min_common_named_subsumers needs at least one name");
  }
  std::vector<int> ids;
  for (const auto& name : names) {
    int id = base_.concept_id(name);
    if (id < 0 || !base_.is_user_concept(id)) {
      throw Error(ErrorCode::UnknownSymbol, "unknown concept name '" + name + "'");
    }
    ids.push_back(id);
  }
  std::vector<int> common;
  for (int candidate = 0; candidate < base_.concept_count(); ++candidate) {
    if (!base_.is_user_concept(candidate)) continue;
    bool everywhere = true;
    for (int id : ids) {
      if (!base_index_.subsumed(id, candidate)) {
        everywhere = false;
        break;
      }
    }
    if (everywhere) common.push_back(candidate);
  }
  return minimal_named(base_index_, common);
}

std::vector<std::string> Reasoner::common_named_subsumers(const ConceptRef& c,
                                                          const ConceptRef& d) const {
  validate_symbols(c);
  validate_symbols(d);
  Normalizer extend(base_);
  int qc = extend.add_query_name(kQueryLeft, canonicalize(c));
  int qd = extend.add_query_name(kQueryRight, canonicalize(d));
  NormalizedAxiomSet extended = extend.take();
  ClassificationIndex index = saturate(extended);
  std::vector<int> common;
  for (int candidate = 0; candidate < extended.concept_count(); ++candidate) {
    if (!extended.is_user_concept(candidate)) continue;
    if (index.subsumed(qc, candidate) && index.subsumed(qd, candidate)) {
      common.push_back(candidate);
    }
  }
  // Query names do not disturb subsumptions between user names, so the
  // extended index is also the right minimality witness.
  return minimal_named(index, common);
}

std::vector<std::string> Reasoner::named_subsumers(const std::string& concept_name) const {
  int id = base_.concept_id(concept_name);
  if (id < 0 || !base_.is_user_concept(id)) {
    throw Error(ErrorCode::UnknownSymbol, "unknown concept name '" + concept_name + "'");
  }
  std::vector<std::string> out;
  for (int candidate = 0; candidate < base_.concept_count(); ++candidate) {
    if (!base_.is_user_concept(candidate)) continue;
    if (base_index_.subsumed(id, candidate)) out.push_back(base_.concept_label(candidate));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool subsumes(const ConceptRef& c, const ConceptRef& d, const Ontology& ontology) {
  return Reasoner(ontology).subsumes(c, d);
}

bool equivalent(const ConceptRef& c, const ConceptRef& d, const Ontology& ontology) {
  return Reasoner(ontology).equivalent(c, d);
}

bool strictly_subsumed(const ConceptRef& c, const ConceptRef& d, const Ontology& ontology) {
  return Reasoner(ontology).strictly_subsumed(c, d);
}

std::vector<std::pair<std::string, std::string>> hierarchy_axioms(const Reasoner& reasoner) {
  const NormalizedAxiomSet& ax = reasoner.normalized();
  const ClassificationIndex& index = reasoner.index();

  std::vector<int> names;
  for (int c = 0; c < ax.concept_count(); ++c) {
    if (ax.is_user_concept(c)) names.push_back(c);
  }
  std::sort(names.begin(), names.end(), [&](int a, int b) {
    return ax.concept_label(a) < ax.concept_label(b);
  });

  std::vector<std::pair<std::string, std::string>> out;

  std::vector<int> regular;
  std::vector<int> unsatisfiable;
  std::vector<int> universal;
  for (int c : names) {
    if (index.in_s(c, NormalizedAxiomSet::kBottom)) {
      unsatisfiable.push_back(c);
    } else if (index.in_s(NormalizedAxiomSet::kTop, c)) {
      universal.push_back(c);
    } else {
      regular.push_back(c);
    }
  }

  for (int c : unsatisfiable) out.emplace_back(ax.concept_label(c), "Bottom");
  for (int c : universal) out.emplace_back("Top", ax.concept_label(c));

  // Equivalence classes among the remaining names, represented by the
  // name-least member; other members hang off the representative as mutual
  // subsumption pairs.
  std::vector<int> representative_of(ax.concept_count(), -1);
  std::vector<int> representatives;
  for (int c : regular) {
    int rep = c;
    for (int d : regular) {
      if (d == c) continue;
      if (index.in_s(c, d) && index.in_s(d, c) &&
          ax.concept_label(d) < ax.concept_label(rep)) {
        rep = d;
      }
    }
    representative_of[c] = rep;
    if (rep == c) representatives.push_back(c);
  }
  for (int c : regular) {
    int rep = representative_of[c];
    if (rep != c) {
      out.emplace_back(ax.concept_label(c), ax.concept_label(rep));
      out.emplace_back(ax.concept_label(rep), ax.concept_label(c));
    }
  }

  // Direct (transitively reduced) edges between class representatives: keep
  // u -> v when no third class sits strictly between them.
  for (int u : representatives) {
    std::vector<int> supers;
    for (int v : representatives) {
      if (v != u && index.in_s(u, v)) supers.push_back(v);
    }
    for (int v : supers) {
      bool direct = true;
      for (int w : supers) {
        if (w == v) continue;
        if (index.in_s(w, v)) {
          direct = false;
          break;
        }
      }
      if (direct) out.emplace_back(ax.concept_label(u), ax.concept_label(v));
    }
  }
  return out;
}

}  // namespace elmatch
