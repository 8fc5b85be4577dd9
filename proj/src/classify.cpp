#include "elmatch/classify.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace elmatch {

std::vector<int> ClassificationIndex::s_sorted(int c) const {
  std::vector<int> out = s_list_[c];
  std::sort(out.begin(), out.end());
  return out;
}

// Queue-driven saturation. Completion rules, with O ranging over the normal
// axioms and S/R over the index under construction:
//
//   membership (C, D) meaning D in S(C):
//     D \sqsubseteq B          -> B in S(C)
//     D \sqcap D2 \sqsubseteq B, D2 in S(C)           -> B in S(C)
//     D \sqsubseteq some r.B   -> (C, B) in R(r)
//     some r.D \sqsubseteq E, (B, C) in R(r)          -> E in S(B)
//     D = Bottom, (B, C) in R(r)                      -> Bottom in S(B)
//   edge (r, C, D):
//     Bottom in S(D)                                  -> Bottom in S(C)
//     some r.D' \sqsubseteq E, D' in S(D)             -> E in S(C)
//     r \sqsubseteq s                                 -> (C, D) in R(s)
//     r o r2 \sqsubseteq t, (D, E) in R(r2)           -> (C, E) in R(t)
//     r1 o r \sqsubseteq t, (B, C) in R(r1)           -> (B, D) in R(t)
//
// Nominal merging runs as an outer pass: when {a} in S(C) and {a} in S(D)
// and D is reachable from C or from some nominal along R edges, S(D) folds
// into S(C). Reachability from a nominal keeps the rule sound: a nominal is
// nonempty in every interpretation, so the chain witnesses that D is
// nonempty whenever the premise matters.
class Saturator {
 public:
  explicit Saturator(const NormalizedAxiomSet& axioms) : ax_(axioms) {
    const int n = ax_.concept_count();
    const int nr = ax_.role_count();
    idx_.s_set_.resize(n);
    idx_.s_list_.resize(n);
    idx_.edge_set_.resize(nr);
    idx_.succ_.resize(nr);
    for (auto& per_role : idx_.succ_) per_role.resize(n);
    idx_.pred_.resize(n);
  }

  ClassificationIndex run() {
    const int n = ax_.concept_count();
    for (int c = 0; c < n; ++c) {
      if (c == NormalizedAxiomSet::kBottom) continue;
      add_s(c, c);
      add_s(c, NormalizedAxiomSet::kTop);
    }
    drain();
    if (!ax_.nominal_ids().empty()) {
      while (merge_nominal_members()) drain();
    }
    idx_.inconsistent_ = compute_inconsistent();
    idx_.frozen_ = true;
    return std::move(idx_);
  }

 private:
  void add_s(int c, int d) {
    if (!idx_.s_set_[c].insert(d).second) return;
    idx_.s_list_[c].push_back(d);
    s_queue_.emplace_back(c, d);
  }

  void add_edge(int role, int c, int d) {
    if (!idx_.edge_set_[role].insert(ClassificationIndex::edge_key(c, d)).second) return;
    idx_.succ_[role][c].push_back(d);
    idx_.pred_[d].emplace_back(role, c);
    r_queue_.push_back({role, c, d});
  }

  void drain() {
    while (!s_queue_.empty() || !r_queue_.empty()) {
      while (!s_queue_.empty()) {
        auto [c, d] = s_queue_.front();
        s_queue_.pop_front();
        process_membership(c, d);
      }
      while (!r_queue_.empty()) {
        auto [role, c, d] = r_queue_.front();
        r_queue_.pop_front();
        process_edge(role, c, d);
      }
    }
  }

  void process_membership(int c, int d) {
    for (int b : ax_.subs(d)) add_s(c, b);
    for (const auto& [d2, b] : ax_.conj(d)) {
      if (idx_.s_set_[c].count(d2)) add_s(c, b);
    }
    for (const auto& [role, b] : ax_.exists_rhs(d)) add_edge(role, c, b);
    for (const auto& [role, e] : ax_.exists_lhs_by_filler(d)) {
      for (const auto& [in_role, b] : idx_.pred_[c]) {
        if (in_role == role) add_s(b, e);
      }
    }
    if (d == NormalizedAxiomSet::kBottom) {
      for (const auto& [in_role, b] : idx_.pred_[c]) {
        (void)in_role;
        add_s(b, NormalizedAxiomSet::kBottom);
      }
    }
  }

  void process_edge(int role, int c, int d) {
    if (idx_.s_set_[d].count(NormalizedAxiomSet::kBottom)) {
      add_s(c, NormalizedAxiomSet::kBottom);
    }
    for (int filler : idx_.s_list_[d]) {
      if (const auto* rhs = ax_.exists_lhs(role, filler)) {
        for (int e : *rhs) add_s(c, e);
      }
    }
    for (int s : ax_.role_subs(role)) add_edge(s, c, d);
    for (const auto& [r2, t] : ax_.chain_by_first(role)) {
      for (int e : idx_.succ_[r2][d]) add_edge(t, c, e);
    }
    for (const auto& [r1, t] : ax_.chain_by_second(role)) {
      for (const auto& [in_role, b] : idx_.pred_[c]) {
        if (in_role == r1) add_edge(t, b, d);
      }
    }
  }

  std::vector<bool> reachable_from(const std::vector<int>& starts) const {
    std::vector<bool> seen(ax_.concept_count(), false);
    std::deque<int> work;
    for (int s : starts) {
      if (!seen[s]) {
        seen[s] = true;
        work.push_back(s);
      }
    }
    while (!work.empty()) {
      int at = work.front();
      work.pop_front();
      for (const auto& per_role : idx_.succ_) {
        for (int next : per_role[at]) {
          if (!seen[next]) {
            seen[next] = true;
            work.push_back(next);
          }
        }
      }
    }
    return seen;
  }

  bool merge_nominal_members() {
    std::vector<bool> from_nominals = reachable_from(ax_.nominal_ids());
    bool changed = false;
    for (int nom : ax_.nominal_ids()) {
      std::vector<int> members;
      for (int c = 0; c < ax_.concept_count(); ++c) {
        if (c != NormalizedAxiomSet::kBottom && idx_.s_set_[c].count(nom)) members.push_back(c);
      }
      for (int c : members) {
        std::vector<bool> from_c;
        bool from_c_ready = false;
        for (int d : members) {
          if (c == d) continue;
          bool connected = from_nominals[d];
          if (!connected) {
            if (!from_c_ready) {
              from_c = reachable_from({c});
              from_c_ready = true;
            }
            connected = from_c[d];
          }
          if (!connected) continue;
          for (int x : idx_.s_list_[d]) {
            if (!idx_.s_set_[c].count(x)) {
              add_s(c, x);
              changed = true;
            }
          }
        }
      }
    }
    return changed;
  }

  bool compute_inconsistent() const {
    if (idx_.s_set_[NormalizedAxiomSet::kTop].count(NormalizedAxiomSet::kBottom)) return true;
    for (int nom : ax_.nominal_ids()) {
      if (idx_.s_set_[nom].count(NormalizedAxiomSet::kBottom)) return true;
    }
    return false;
  }

  const NormalizedAxiomSet& ax_;
  ClassificationIndex idx_;
  std::deque<std::pair<int, int>> s_queue_;
  struct Edge {
    int role;
    int c;
    int d;
  };
  std::deque<Edge> r_queue_;
};

ClassificationIndex saturate(const NormalizedAxiomSet& axioms) {
  return Saturator(axioms).run();
}

}  // namespace elmatch
