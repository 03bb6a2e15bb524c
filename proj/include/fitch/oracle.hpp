#pragma once

// Brute-force ground truth for small label sets.
//
// Nothing here calls the recognizers or tree_from_hierarchy. Topologies come
// from a direct search over laminar subset families, and a labeled topology
// is evaluated through the cluster form of the definition: for a hierarchy H
// with labels on its non-root clusters, (x,y) is in X exactly when some
// 1-labeled cluster contains y but not x (those clusters are the edges on
// the path lca(x,y) -> y).
//
// Size limits are hard: 2..5 labels for enumeration, 2..4 for the
// least-resolved search, at most 8 labels for digraph isomorphism.

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "fitch/hierarchy.hpp"
#include "fitch/phylo.hpp"
#include "fitch/relation.hpp"

namespace fitch::oracle {

inline constexpr std::size_t max_enumeration_labels = 5;
inline constexpr std::size_t max_least_resolved_labels = 4;
inline constexpr std::size_t max_iso_labels = 8;

// Every hierarchy on `labels` exactly once.
std::vector<ClusterFamily> enumerate_hierarchies(const LabelSet& labels);

// All 2^|E| edge labelings of `tree`.
std::vector<EdgeLabeledTree> enumerate_labelings(const Tree& tree);

bool oracle_is_fitch(const Relation& relation);

// Explaining trees that admit no explaining coarsement, one per isomorphism
// class. Throws ContractError if nothing explains `relation`.
std::vector<EdgeLabeledTree> oracle_least_resolved_trees(const Relation& relation);

bool digraph_iso(const Relation& lhs, const Relation& rhs);

// Sorted recursive encoding of (subtree, incoming edge label) pairs.
std::string canonical_form(const EdgeLabeledTree& tree);
// Root-, leaf-label- and edge-label-preserving isomorphism. Throws
// DomainError if the leaf sets differ.
bool tree_iso(const EdgeLabeledTree& lhs, const EdgeLabeledTree& rhs);

struct TriangleClass {
  std::string name;  // A1..A8 or F1..F8
  bool allowed = false;
  // Member on {x,y,z} with the smallest pair encoding.
  Relation representative;
  std::size_t member_count = 0;
};

// The 16 isomorphism classes of relations on three labels, ordered by
// (pair count, canonical encoding) and numbered in that order within the
// allowed and forbidden groups.
std::vector<TriangleClass> derive_triangle_catalog();

// Every labeled tree on a fixed label set, indexed by the relation it
// induces. Used to sweep whole corpora without re-enumerating per relation.
class ExplanationAtlas {
 public:
  explicit ExplanationAtlas(LabelSet labels);

  struct LabeledHierarchy {
    std::size_t hierarchy = 0;
    std::uint32_t labeling = 0;  // bit i labels the i-th non-root cluster
  };

  const LabelSet& labels() const { return labels_; }
  const std::vector<ClusterFamily>& hierarchies() const { return hierarchies_; }
  std::size_t labeled_tree_count() const { return labeled_count_; }

  bool is_fitch(const Relation& relation) const;
  std::vector<EdgeLabeledTree> explaining_trees(const Relation& relation) const;
  // Same contract as oracle_least_resolved_trees.
  std::vector<EdgeLabeledTree> least_resolved_trees(const Relation& relation) const;

  // Every (T, lambda) on the label set, each exactly once.
  std::vector<EdgeLabeledTree> all_labeled_trees() const;

  EdgeLabeledTree materialize(const LabeledHierarchy& entry) const;

 private:
  std::uint32_t encode(const Relation& relation) const;

  LabelSet labels_;
  std::vector<ClusterFamily> hierarchies_;
  std::vector<std::vector<std::uint32_t>> cluster_masks_;  // non-root clusters
  std::unordered_map<std::uint32_t, std::vector<LabeledHierarchy>> by_relation_;
  std::size_t labeled_count_ = 0;
};

}  // namespace fitch::oracle
