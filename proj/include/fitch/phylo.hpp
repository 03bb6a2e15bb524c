#pragma once

// Edge-labeled phylogenetic trees (T, lambda) and the relation they induce.

#include <optional>
#include <span>
#include <vector>

#include "fitch/relation.hpp"
#include "fitch/tree.hpp"

namespace fitch {

class EdgeLabeledTree {
 public:
  // Throws StructuralError; every non-root vertex needs an edge label.
  static EdgeLabeledTree build(const RawTree& raw);
  // `labels[v]` labels the edge (par(v), v); the root slot is ignored.
  EdgeLabeledTree(Tree topology, std::vector<EdgeLabel> labels);

  const Tree& topology() const { return topology_; }
  const LabelSet& leaf_labels() const { return topology_.leaf_labels(); }
  // Label of the edge (par(v), v). Throws DomainError for the root.
  EdgeLabel edge_label(VertexId v) const;
  bool is_one_edge(VertexId v) const { return edge_label(v) == EdgeLabel::one; }

  RawTree to_raw() const;

 private:
  Tree topology_;
  std::vector<EdgeLabel> labels_;
};

// All edge-labeled tree invariants, in order: topology, then edge labels.
std::optional<TreeDefect> validate(const RawTree& raw);

VertexId lca(const Tree& tree, std::span<const VertexId> vertices);
VertexId lca(const Tree& tree, VertexId u, VertexId v);

// Some edge on the path ancestor -> descendant is a 1-edge. Throws
// DomainError if `ancestor` is not an ancestor of `descendant`.
bool path_has_one_edge(const EdgeLabeledTree& tree, VertexId ancestor, VertexId descendant);

// X_(T,lambda): (x,y) whenever the path lca(x,y) -> y has a 1-edge.
Relation extract_relation(const EdgeLabeledTree& tree);

// Throws DomainError if the leaf set differs from the relation's labels.
bool explains(const EdgeLabeledTree& tree, const Relation& relation);

// C(coarse) is a proper subset of C(fine). Throws DomainError on leaf-set
// mismatch.
bool is_coarsement(const Tree& coarse, const Tree& fine);

// Every inner edge is a 1-edge, and each such edge (par(v), v) has an outer
// 0-edge (v, x) below it. Throws ContractError if `tree` does not explain
// `relation`.
bool is_least_resolved(const EdgeLabeledTree& tree, const Relation& relation);

}  // namespace fitch
