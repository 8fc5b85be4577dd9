#include "elmatch/ontology.hpp"

#include <cassert>
#include <utility>

#include "elmatch/diagnostics.hpp"

namespace elmatch {

namespace {

void insert_name(const std::string& name, std::vector<std::string>& names,
                 std::unordered_map<std::string, std::size_t>& ids) {
  if (ids.find(name) != ids.end()) return;
  ids.emplace(name, names.size());
  names.push_back(name);
}

}  // namespace

void Ontology::declare_concept(const std::string& name) {
  insert_name(name, concept_names_, concept_ids_);
}

void Ontology::declare_role(const std::string& name) {
  insert_name(name, role_names_, role_ids_);
}

void Ontology::declare_individual(const std::string& name) {
  insert_name(name, individual_names_, individual_ids_);
}

bool Ontology::has_concept(const std::string& name) const {
  return concept_ids_.find(name) != concept_ids_.end();
}

bool Ontology::has_role(const std::string& name) const {
  return role_ids_.find(name) != role_ids_.end();
}

bool Ontology::has_individual(const std::string& name) const {
  return individual_ids_.find(name) != individual_ids_.end();
}

void Ontology::register_symbols(const ConceptRef& expr) {
  assert(expr != nullptr);
  switch (expr->kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return;
    case ConceptKind::Atom:
      declare_concept(expr->name());
      return;
    case ConceptKind::Nominal:
      declare_individual(expr->name());
      return;
    case ConceptKind::Some:
      declare_role(expr->role());
      register_symbols(expr->filler());
      return;
    case ConceptKind::And:
      for (const auto& m : expr->members()) register_symbols(m);
      return;
  }
}

void Ontology::add_gci(ConceptRef lhs, ConceptRef rhs) {
  register_symbols(lhs);
  register_symbols(rhs);
  axioms_.push_back(Gci{std::move(lhs), std::move(rhs)});
}

void Ontology::add_role_inclusion(RoleChain chain, std::string super) {
  assert(!chain.roles.empty());
  for (const auto& r : chain.roles) declare_role(r);
  declare_role(super);
  axioms_.push_back(RoleInclusion{std::move(chain), std::move(super)});
}

void Ontology::add_concept_assertion(ConceptRef expr, std::string individual) {
  register_symbols(expr);
  declare_individual(individual);
  axioms_.push_back(ConceptAssertion{std::move(expr), std::move(individual)});
}

void Ontology::add_role_assertion(std::string role, std::string subject, std::string object) {
  declare_role(role);
  declare_individual(subject);
  declare_individual(object);
  axioms_.push_back(RoleAssertion{std::move(role), std::move(subject), std::move(object)});
}

void Ontology::add_component(std::string role, std::string top_concept) {
  if (find_component(role) != nullptr) {
    throw Error(ErrorCode::DuplicateComponent,
                "component role '" + role + "' declared more than once");
  }
  declare_role(role);
  declare_concept(top_concept);
  components_.push_back(ComponentDecl{std::move(role), std::move(top_concept)});
}

const ComponentDecl* Ontology::find_component(const std::string& role) const {
  for (const auto& c : components_) {
    if (c.role == role) return &c;
  }
  return nullptr;
}

}  // namespace elmatch
