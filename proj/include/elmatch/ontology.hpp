#pragma once

#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "elmatch/concept.hpp"

namespace elmatch {

// Role composition chain r1 o r2 o ... o rn, n >= 1.
struct RoleChain {
  std::vector<std::string> roles;
};

struct Gci {
  ConceptRef lhs;
  ConceptRef rhs;
};

// chain \sqsubseteq super.
struct RoleInclusion {
  RoleChain chain;
  std::string super;
};

// C(a). Parsed and stored, but ignored by classification.
struct ConceptAssertion {
  ConceptRef concept_expr;
  std::string individual;
};

// r(a, b). Parsed and stored, but ignored by classification.
struct RoleAssertion {
  std::string role;
  std::string subject;
  std::string object;
};

using Axiom = std::variant<Gci, RoleInclusion, ConceptAssertion, RoleAssertion>;

// A matchmaking dimension: offers and demands are compared per component
// role, whose fillers live under the declared top concept.
struct ComponentDecl {
  std::string role;
  std::string top_concept;
};

// Axioms plus component declarations plus the symbol tables they mention.
// Symbols register implicitly on first use; insertion order is preserved so
// downstream id assignment stays deterministic. Component declaration order
// fixes the component evaluation order.
class Ontology {
 public:
  void declare_concept(const std::string& name);
  void declare_role(const std::string& name);
  void declare_individual(const std::string& name);

  bool has_concept(const std::string& name) const;
  bool has_role(const std::string& name) const;
  bool has_individual(const std::string& name) const;

  // All add_* calls register the symbols they reference.
  void add_gci(ConceptRef lhs, ConceptRef rhs);
  void add_role_inclusion(RoleChain chain, std::string super);
  void add_concept_assertion(ConceptRef expr, std::string individual);
  void add_role_assertion(std::string role, std::string subject, std::string object);
  // Throws Error{DuplicateComponent} when the role is already declared as one.
  void add_component(std::string role, std::string top_concept);

  const std::vector<Axiom>& axioms() const { return axioms_; }
  const std::vector<ComponentDecl>& components() const { return components_; }
  const ComponentDecl* find_component(const std::string& role) const;

  const std::vector<std::string>& concept_names() const { return concept_names_; }
  const std::vector<std::string>& role_names() const { return role_names_; }
  const std::vector<std::string>& individual_names() const { return individual_names_; }

  // Registers every atom, role, and nominal appearing in the expression.
  void register_symbols(const ConceptRef& expr);

 private:
  std::vector<Axiom> axioms_;
  std::vector<ComponentDecl> components_;
  std::vector<std::string> concept_names_;
  std::vector<std::string> role_names_;
  std::vector<std::string> individual_names_;
  std::unordered_map<std::string, std::size_t> concept_ids_;
  std::unordered_map<std::string, std::size_t> role_ids_;
  std::unordered_map<std::string, std::size_t> individual_ids_;
};

}  // namespace elmatch
