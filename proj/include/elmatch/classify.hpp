#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "elmatch/normalize.hpp"

namespace elmatch {

// Saturation output: for every basic concept X, S(X) is the set of proven
// subsumers of X among basic concepts (plus Bottom), and R(r) is the set of
// proven role edges (X, Y) meaning X \sqsubseteq some r.Y. After saturate()
// the index is frozen: it only answers queries and never mutates, so it can
// be shared across threads.
class ClassificationIndex {
 public:
  bool frozen() const { return frozen_; }
  int concept_count() const { return static_cast<int>(s_list_.size()); }

  // D in S(C)?
  bool in_s(int c, int d) const { return s_set_[c].count(d) != 0; }
  // (C, D) in R(r)?
  bool in_r(int role, int c, int d) const {
    return edge_set_[role].count(edge_key(c, d)) != 0;
  }

  // Insertion-ordered membership list for S(C).
  const std::vector<int>& s(int c) const { return s_list_[c]; }
  // Sorted copy, for deterministic iteration and comparisons.
  std::vector<int> s_sorted(int c) const;
  const std::vector<int>& successors(int role, int c) const { return succ_[role][c]; }
  // All (role, predecessor) pairs with an edge into c.
  const std::vector<std::pair<int, int>>& predecessors(int c) const { return pred_[c]; }

  // Bottom in S(Top), or Bottom in S({a}) for some nominal: no model exists.
  bool inconsistent() const { return inconsistent_; }

  // Entailed subsumption between basic concepts, Bottom-aware.
  bool subsumed(int c, int d) const {
    return inconsistent_ || d == NormalizedAxiomSet::kTop || in_s(c, d) ||
           in_s(c, NormalizedAxiomSet::kBottom);
  }

 private:
  friend ClassificationIndex saturate(const NormalizedAxiomSet& axioms);
  friend class Saturator;

  static std::uint64_t edge_key(int c, int d) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c)) << 32) |
           static_cast<std::uint32_t>(d);
  }

  std::vector<std::unordered_set<int>> s_set_;
  std::vector<std::vector<int>> s_list_;
  std::vector<std::unordered_set<std::uint64_t>> edge_set_;  // per role
  std::vector<std::vector<std::vector<int>>> succ_;          // succ_[r][c]
  std::vector<std::vector<std::pair<int, int>>> pred_;       // pred_[c] = (r, b)
  bool inconsistent_ = false;
  bool frozen_ = false;
};

// Runs the completion rules to their unique fixpoint. Terminates in
// polynomial time; the result does not depend on processing order.
ClassificationIndex saturate(const NormalizedAxiomSet& axioms);

}  // namespace elmatch
