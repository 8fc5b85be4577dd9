#include "elmatch/concept.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace elmatch {

namespace {

// Sort key helper: canonical members are ordered by their rendered text.
bool render_less(const ConceptRef& a, const ConceptRef& b) {
  return render(a) < render(b);
}

// Shared by conj() and canonicalize(): flatten, drop Top, absorb Bottom,
// sort, deduplicate. Members are assumed individually canonical.
ConceptRef conj_of_canonical(std::vector<ConceptRef> members) {
  std::vector<ConceptRef> flat;
  flat.reserve(members.size());
  for (auto& m : members) {
    if (m->kind() == ConceptKind::And) {
      for (const auto& inner : m->members()) flat.push_back(inner);
    } else {
      flat.push_back(std::move(m));
    }
  }
  for (const auto& m : flat) {
    if (m->is_bottom()) return ConceptExpr::bottom();
  }
  flat.erase(std::remove_if(flat.begin(), flat.end(),
                            [](const ConceptRef& m) { return m->is_top(); }),
             flat.end());
  std::sort(flat.begin(), flat.end(), render_less);
  flat.erase(std::unique(flat.begin(), flat.end(),
                         [](const ConceptRef& a, const ConceptRef& b) { return equal(a, b); }),
             flat.end());
  if (flat.empty()) return ConceptExpr::top();
  if (flat.size() == 1) return flat.front();
  return ConceptExpr::raw_conj(std::move(flat));
}

}  // namespace

const ConceptRef& ConceptExpr::top() {
  static const ConceptRef instance = [] {
    auto node = std::shared_ptr<ConceptExpr>(new ConceptExpr());
    node->kind_ = ConceptKind::Top;
    return ConceptRef(node);
  }();
  return instance;
}

const ConceptRef& ConceptExpr::bottom() {
  static const ConceptRef instance = [] {
    auto node = std::shared_ptr<ConceptExpr>(new ConceptExpr());
    node->kind_ = ConceptKind::Bottom;
    return ConceptRef(node);
  }();
  return instance;
}

ConceptRef ConceptExpr::atom(std::string name) {
  assert(!name.empty());
  auto node = std::shared_ptr<ConceptExpr>(new ConceptExpr());
  node->kind_ = ConceptKind::Atom;
  node->name_ = std::move(name);
  return node;
}

ConceptRef ConceptExpr::nominal(std::string individual) {
  assert(!individual.empty());
  auto node = std::shared_ptr<ConceptExpr>(new ConceptExpr());
  node->kind_ = ConceptKind::Nominal;
  node->name_ = std::move(individual);
  return node;
}

ConceptRef ConceptExpr::some(std::string role, ConceptRef filler) {
  assert(!role.empty());
  assert(filler != nullptr);
  auto node = std::shared_ptr<ConceptExpr>(new ConceptExpr());
  node->kind_ = ConceptKind::Some;
  node->role_ = std::move(role);
  node->filler_ = std::move(filler);
  return node;
}

ConceptRef ConceptExpr::conj(std::vector<ConceptRef> members) {
  return conj_of_canonical(std::move(members));
}

ConceptRef ConceptExpr::raw_conj(std::vector<ConceptRef> members) {
  assert(members.size() >= 2);
  auto node = std::shared_ptr<ConceptExpr>(new ConceptExpr());
  node->kind_ = ConceptKind::And;
  node->members_ = std::move(members);
  return node;
}

bool equal(const ConceptExpr& a, const ConceptExpr& b) {
  if (&a == &b) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return true;
    case ConceptKind::Atom:
    case ConceptKind::Nominal:
      return a.name() == b.name();
    case ConceptKind::Some:
      return a.role() == b.role() && equal(*a.filler(), *b.filler());
    case ConceptKind::And: {
      if (a.members().size() != b.members().size()) return false;
      for (std::size_t i = 0; i < a.members().size(); ++i) {
        if (!equal(*a.members()[i], *b.members()[i])) return false;
      }
      return true;
    }
  }
  return false;
}

bool equal(const ConceptRef& a, const ConceptRef& b) {
  assert(a != nullptr && b != nullptr);
  return equal(*a, *b);
}

ConceptRef canonicalize(const ConceptRef& expr) {
  assert(expr != nullptr);
  switch (expr->kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atom:
    case ConceptKind::Nominal:
      return expr;
    case ConceptKind::Some: {
      ConceptRef filler = canonicalize(expr->filler());
      if (filler == expr->filler()) return expr;
      return ConceptExpr::some(expr->role(), std::move(filler));
    }
    case ConceptKind::And: {
      std::vector<ConceptRef> members;
      members.reserve(expr->members().size());
      for (const auto& m : expr->members()) members.push_back(canonicalize(m));
      return conj_of_canonical(std::move(members));
    }
  }
  return expr;
}

std::size_t syntactic_length(const ConceptRef& expr) {
  assert(expr != nullptr);
  switch (expr->kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return 0;
    case ConceptKind::Atom:
    case ConceptKind::Nominal:
      return 1;
    case ConceptKind::Some:
      return syntactic_length(expr->filler());
    case ConceptKind::And: {
      std::size_t n = 0;
      for (const auto& m : expr->members()) n += syntactic_length(m);
      return n;
    }
  }
  return 0;
}

void render_to(const ConceptExpr& expr, std::string& out) {
  switch (expr.kind()) {
    case ConceptKind::Top:
      out += "Top";
      return;
    case ConceptKind::Bottom:
      out += "Bottom";
      return;
    case ConceptKind::Atom:
      out += expr.name();
      return;
    case ConceptKind::Nominal:
      out += '{';
      out += expr.name();
      out += '}';
      return;
    case ConceptKind::Some:
      out += "some(";
      out += expr.role();
      out += ", ";
      render_to(*expr.filler(), out);
      out += ')';
      return;
    case ConceptKind::And: {
      out += "and(";
      bool first = true;
      for (const auto& m : expr.members()) {
        if (!first) out += ", ";
        first = false;
        render_to(*m, out);
      }
      out += ')';
      return;
    }
  }
}

std::string render(const ConceptRef& expr) {
  assert(expr != nullptr);
  std::string out;
  render_to(*expr, out);
  return out;
}

std::vector<ConceptRef> top_level_conjuncts(const ConceptRef& expr) {
  assert(expr != nullptr);
  if (expr->is_top()) return {};
  if (expr->kind() == ConceptKind::And) return expr->members();
  return {expr};
}

}  // namespace elmatch
