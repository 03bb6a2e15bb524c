#pragma once

#include <optional>
#include <set>
#include <utility>

#include "fitch/relation.hpp"
#include "fitch/tree.hpp"

namespace fitch {

// A deduplicated family of non-empty subsets of a ground label set.
class ClusterFamily {
 public:
  ClusterFamily() = default;
  explicit ClusterFamily(LabelSet ground) : ground_(std::move(ground)) {}
  // Throws DomainError for empty sets or indices outside the ground set.
  ClusterFamily(LabelSet ground, const std::vector<IndexSet>& sets);

  static ClusterFamily from_names(LabelSet ground,
                                  const std::vector<std::vector<std::string>>& sets);

  // Normalizes `set` (sort + dedupe); returns false if already present.
  bool insert(IndexSet set);
  bool contains(const IndexSet& set) const { return sets_.count(set) != 0; }

  const LabelSet& ground() const { return ground_; }
  const std::set<IndexSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  friend bool operator==(const ClusterFamily&, const ClusterFamily&) = default;

 private:
  LabelSet ground_;
  std::set<IndexSet> sets_;
};

using SetPair = std::pair<IndexSet, IndexSet>;

// nullopt if every P, Q satisfy P & Q in {P, Q, {}}; otherwise the first
// overlapping pair in ascending set order.
std::optional<SetPair> is_hierarchy_like(const ClusterFamily& family);

// Hierarchy-like, contains the ground set and every singleton.
bool is_hierarchy(const ClusterFamily& family);

// The phylogenetic tree whose cluster set is `hierarchy`. Each set becomes
// one vertex; its parent is the smallest proper superset. Children are
// ordered by their smallest leaf. Inner vertices are unnamed.
Tree tree_from_hierarchy(const ClusterFamily& hierarchy);

ClusterFamily clusters_of_tree(const Tree& tree);

}  // namespace fitch
