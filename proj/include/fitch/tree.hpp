#pragma once

// Rooted phylogenetic tree topologies.
//
// A RawTree is an unchecked parent-pointer description, as produced by a
// parser or a builder. Tree::build validates it into an immutable Tree whose
// vertices keep their RawTree ids. Leaves carry labels; the leaf labels form
// the tree's LabelSet and every cluster is an IndexSet over it.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fitch/relation.hpp"

namespace fitch {

using VertexId = std::size_t;
inline constexpr VertexId no_vertex = std::numeric_limits<VertexId>::max();

enum class EdgeLabel : std::uint8_t { zero = 0, one = 1 };

struct RawVertex {
  std::optional<VertexId> parent;
  // Leaf label, or optional name of an inner vertex.
  std::string name;
  // Label of the edge (parent, this); ignored for topology-only trees.
  std::optional<EdgeLabel> edge_label;
};

struct RawTree {
  std::vector<RawVertex> vertices;

  VertexId add(std::optional<VertexId> parent, std::string name = {},
               std::optional<EdgeLabel> label = std::nullopt) {
    vertices.push_back({parent, std::move(name), label});
    return vertices.size() - 1;
  }
};

enum class DefectKind {
  empty,
  dangling_parent,
  disconnected,
  cycle,
  root_degree,
  inner_degree,
  missing_leaf_label,
  duplicate_leaf_label,
  missing_edge_label,
  root_edge_label,
};

struct TreeDefect {
  DefectKind kind;
  VertexId vertex = no_vertex;
  std::string message;
};

const char* to_string(DefectKind kind);

// Structure only: connectivity, acyclicity, degrees, leaf labels.
std::optional<TreeDefect> validate_topology(const RawTree& raw);

class Tree {
 public:
  // Throws StructuralError naming the first defect found.
  static Tree build(const RawTree& raw);

  std::size_t size() const { return parent_.size(); }
  VertexId root() const { return root_; }
  VertexId parent(VertexId v) const { return parent_.at(v); }
  const std::vector<VertexId>& children(VertexId v) const { return children_.at(v); }
  bool is_leaf(VertexId v) const { return children_.at(v).empty(); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::size_t depth(VertexId v) const { return depth_.at(v); }

  const LabelSet& leaf_labels() const { return leaf_labels_; }
  VertexId leaf(LabelIndex x) const { return leaf_vertex_.at(x); }
  // Cl(v): leaves below v.
  const IndexSet& cluster(VertexId v) const { return clusters_.at(v); }
  std::optional<VertexId> find_cluster(const IndexSet& cluster) const;

  // u is an ancestor of v (u == v included).
  bool is_ancestor(VertexId u, VertexId v) const;

  // The RawTree this tree was built from, with edge labels cleared.
  RawTree to_raw() const;

 private:
  Tree() = default;

  VertexId root_ = no_vertex;
  std::vector<VertexId> parent_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<std::string> names_;
  std::vector<std::size_t> depth_;
  LabelSet leaf_labels_;
  std::vector<VertexId> leaf_vertex_;
  std::vector<IndexSet> clusters_;
};

}  // namespace fitch
