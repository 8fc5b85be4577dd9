#include "elmatch/inference.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "elmatch/diagnostics.hpp"

namespace elmatch {

bool is_simple_description(const ConceptRef& expr) {
  switch (expr->kind()) {
    case ConceptKind::Top:
    case ConceptKind::Atom:
      return true;
    case ConceptKind::Bottom:
    case ConceptKind::Nominal:
      return false;
    case ConceptKind::Some:
      return is_simple_description(expr->filler());
    case ConceptKind::And:
      return std::all_of(expr->members().begin(), expr->members().end(),
                         is_simple_description);
  }
  return false;
}

namespace {

void ensure_simple_at(const ConceptRef& expr) {
  switch (expr->kind()) {
    case ConceptKind::Top:
    case ConceptKind::Atom:
      return;
    case ConceptKind::Nominal:
      throw Error(ErrorCode::NominalUnsupported,
                  "nominal " + render(expr) + " is not supported here");
    case ConceptKind::Bottom:
      throw Error(ErrorCode::NotSimpleDescription,
                  "Bottom is not a simple description");
    case ConceptKind::Some:
      ensure_simple_at(expr->filler());
      return;
    case ConceptKind::And:
      for (const auto& m : expr->members()) ensure_simple_at(m);
      return;
  }
}

// Keeps one representative per equivalence class (smallest rendering), then
// drops conjuncts strictly above another kept conjunct.
std::vector<ConceptRef> prune_conjuncts(std::vector<ConceptRef> conjuncts,
                                        const Reasoner& reasoner) {
  std::sort(conjuncts.begin(), conjuncts.end(), [](const ConceptRef& a, const ConceptRef& b) {
    return render(a) < render(b);
  });
  std::vector<ConceptRef> kept;
  for (const auto& candidate : conjuncts) {
    bool drop = false;
    for (const auto& other : kept) {
      if (reasoner.equivalent(other, candidate)) {
        drop = true;  // earlier (smaller) rendering already kept
        break;
      }
    }
    if (!drop) kept.push_back(candidate);
  }
  std::vector<ConceptRef> out;
  for (const auto& candidate : kept) {
    bool redundant = false;
    for (const auto& other : kept) {
      if (other == candidate) continue;
      if (reasoner.strictly_subsumed(other, candidate)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(candidate);
  }
  return out;
}

ConceptRef conjunction_of(std::vector<ConceptRef> conjuncts) {
  if (conjuncts.empty()) return ConceptExpr::top();
  if (conjuncts.size() == 1) return conjuncts.front();
  return ConceptExpr::conj(std::move(conjuncts));
}

ConceptRef reduce_canonical(const ConceptRef& expr, const Reasoner& reasoner) {
  if (expr->is_top() || expr->kind() == ConceptKind::Atom) return expr;
  if (expr->kind() == ConceptKind::Some) {
    return ConceptExpr::some(expr->role(), reduce_canonical(expr->filler(), reasoner));
  }
  assert(expr->kind() == ConceptKind::And);
  std::vector<ConceptRef> conjuncts;
  conjuncts.reserve(expr->members().size());
  for (const auto& m : expr->members()) conjuncts.push_back(reduce_canonical(m, reasoner));
  return conjunction_of(prune_conjuncts(std::move(conjuncts), reasoner));
}

}  // namespace

void ensure_simple(const ConceptRef& expr) {
  assert(expr != nullptr);
  ensure_simple_at(expr);
}

ConceptRef reduce(const ConceptRef& expr, const Reasoner& reasoner) {
  ensure_simple(expr);
  return canonicalize(reduce_canonical(canonicalize(expr), reasoner));
}

namespace {

ConceptRef lcs_reduced(const ConceptRef& c, const ConceptRef& d, const Reasoner& reasoner) {
  // Degenerate inputs: an unsatisfiable side places no constraint on the
  // result beyond the other side.
  if (!reasoner.satisfiable(c)) return reasoner.satisfiable(d) ? d : ConceptExpr::top();
  if (!reasoner.satisfiable(d)) return c;

  std::vector<ConceptRef> conjuncts;
  for (const auto& name : reasoner.common_named_subsumers(c, d)) {
    conjuncts.push_back(ConceptExpr::atom(name));
  }
  for (const auto& left : top_level_conjuncts(c)) {
    if (left->kind() != ConceptKind::Some) continue;
    for (const auto& right : top_level_conjuncts(d)) {
      if (right->kind() != ConceptKind::Some || right->role() != left->role()) continue;
      conjuncts.push_back(ConceptExpr::some(
          left->role(), lcs_reduced(left->filler(), right->filler(), reasoner)));
    }
  }
  return conjunction_of(prune_conjuncts(std::move(conjuncts), reasoner));
}

}  // namespace

ConceptRef lcs(const ConceptRef& c, const ConceptRef& d, const Reasoner& reasoner) {
  ensure_simple(c);
  ensure_simple(d);
  ConceptRef left = reduce(c, reasoner);
  ConceptRef right = reduce(d, reasoner);
  return canonicalize(lcs_reduced(left, right, reasoner));
}

ConceptRef semantic_difference(const ConceptRef& c, const ConceptRef& d,
                               const Reasoner& reasoner) {
  ensure_simple(c);
  ensure_simple(d);
  ConceptRef minuend = reduce(c, reasoner);
  ConceptRef subtrahend = reduce(d, reasoner);
  if (!reasoner.subsumes(minuend, subtrahend)) {
    throw Error(ErrorCode::PreconditionViolated,
                "difference requires " + render(minuend) + " to be subsumed by " +
                    render(subtrahend));
  }
  std::vector<ConceptRef> kept;
  for (const auto& conjunct : top_level_conjuncts(minuend)) {
    if (!reasoner.subsumes(subtrahend, conjunct)) kept.push_back(conjunct);
  }
  ConceptRef result = canonicalize(conjunction_of(std::move(kept)));
  // Defining identity: putting the removed information back restores c.
  ConceptRef rebuilt = ConceptExpr::conj({result, subtrahend});
  if (!reasoner.equivalent(rebuilt, minuend)) {
    throw std::logic_error("difference reconstruction failed for " + render(minuend) +
                           " minus " + render(subtrahend));
  }
  return result;
}

ConceptRef rest(const ConceptRef& demand_proj, const ConceptRef& offer_proj,
                const Reasoner& reasoner) {
  ConceptRef shared = lcs(demand_proj, offer_proj, reasoner);
  return semantic_difference(reduce(demand_proj, reasoner), shared, reasoner);
}

ConceptRef miss(const ConceptRef& demand_proj, const ConceptRef& offer_proj,
                const Reasoner& reasoner) {
  ConceptRef shared = lcs(demand_proj, offer_proj, reasoner);
  return semantic_difference(reduce(offer_proj, reasoner), shared, reasoner);
}

ConceptRef reduce(const ConceptRef& expr, const Ontology& ontology) {
  return reduce(expr, Reasoner(ontology));
}

ConceptRef lcs(const ConceptRef& c, const ConceptRef& d, const Ontology& ontology) {
  return lcs(c, d, Reasoner(ontology));
}

ConceptRef semantic_difference(const ConceptRef& c, const ConceptRef& d,
                               const Ontology& ontology) {
  return semantic_difference(c, d, Reasoner(ontology));
}

ConceptRef rest(const ConceptRef& demand_proj, const ConceptRef& offer_proj,
                const Ontology& ontology) {
  return rest(demand_proj, offer_proj, Reasoner(ontology));
}

ConceptRef miss(const ConceptRef& demand_proj, const ConceptRef& offer_proj,
                const Ontology& ontology) {
  return miss(demand_proj, offer_proj, Reasoner(ontology));
}

}  // namespace elmatch
