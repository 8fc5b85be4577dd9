#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace elmatch {

enum class ConceptKind { Top, Bottom, Atom, Nominal, And, Some };

class ConceptExpr;
using ConceptRef = std::shared_ptr<const ConceptExpr>;

// Immutable description tree. Nodes are shared freely; nothing mutates after
// construction, so concurrent reads are safe.
//
// Canonical form: conjunctions are flattened (no nested And), duplicate
// members removed, members sorted by rendered text; Top never appears as a
// member, a Bottom member collapses the whole conjunction to Bottom; a
// one-member conjunction is replaced by its member. conj() establishes this
// at one level assuming its inputs are canonical; canonicalize() establishes
// it for an arbitrary tree.
class ConceptExpr {
 public:
  static const ConceptRef& top();
  static const ConceptRef& bottom();
  static ConceptRef atom(std::string name);
  static ConceptRef nominal(std::string individual);
  static ConceptRef some(std::string role, ConceptRef filler);
  // Canonicalizing conjunction constructor; members must be canonical.
  static ConceptRef conj(std::vector<ConceptRef> members);
  // Stores the members exactly as given (parser output, canonicalize tests).
  static ConceptRef raw_conj(std::vector<ConceptRef> members);

  ConceptKind kind() const { return kind_; }
  // Atom: concept name; Nominal: individual name.
  const std::string& name() const { return name_; }
  const std::string& role() const { return role_; }
  const ConceptRef& filler() const { return filler_; }
  const std::vector<ConceptRef>& members() const { return members_; }

  bool is_top() const { return kind_ == ConceptKind::Top; }
  bool is_bottom() const { return kind_ == ConceptKind::Bottom; }

 private:
  ConceptExpr() = default;

  ConceptKind kind_ = ConceptKind::Top;
  std::string name_;
  std::string role_;
  ConceptRef filler_;
  std::vector<ConceptRef> members_;
};

// Structural equality (exact tree; canonical forms of equivalent-modulo-ACI
// expressions compare equal).
bool equal(const ConceptExpr& a, const ConceptExpr& b);
bool equal(const ConceptRef& a, const ConceptRef& b);

// Unique canonical form: only associativity, commutativity and idempotence of
// conjunction plus the Top/Bottom member rules are applied, so the result is
// logically equivalent to the input. Idempotent.
ConceptRef canonicalize(const ConceptRef& expr);

// Number of Atom and Nominal occurrences (occurrences, not distinct names);
// Top and Bottom count zero. Nominals count as maximally specific atoms.
std::size_t syntactic_length(const ConceptRef& expr);

// Concrete syntax: Top | Bottom | name | {individual} | and(a, b, ...) |
// some(role, filler). Injective on canonical forms, which makes it usable as
// a sort and cache key.
std::string render(const ConceptRef& expr);
void render_to(const ConceptExpr& expr, std::string& out);

// Top-level conjuncts: members for And, empty for Top, {expr} otherwise.
std::vector<ConceptRef> top_level_conjuncts(const ConceptRef& expr);

}  // namespace elmatch
