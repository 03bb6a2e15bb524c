#include "fitch/phylo.hpp"

#include "fitch/errors.hpp"
#include "fitch/hierarchy.hpp"

namespace fitch {

std::optional<TreeDefect> validate(const RawTree& raw) {
  if (auto d = validate_topology(raw)) return d;
  for (VertexId v = 0; v < raw.vertices.size(); ++v) {
    const auto& rv = raw.vertices[v];
    if (!rv.parent && rv.edge_label) {
      return TreeDefect{DefectKind::root_edge_label, v,
                        std::string(to_string(DefectKind::root_edge_label)) + " at vertex " +
                            std::to_string(v)};
    }
    if (rv.parent && !rv.edge_label) {
      return TreeDefect{DefectKind::missing_edge_label, v,
                        std::string(to_string(DefectKind::missing_edge_label)) + " at vertex " +
                            std::to_string(v)};
    }
  }
  return std::nullopt;
}

EdgeLabeledTree EdgeLabeledTree::build(const RawTree& raw) {
  if (auto d = validate(raw)) throw StructuralError(d->message);
  std::vector<EdgeLabel> labels(raw.vertices.size(), EdgeLabel::zero);
  for (VertexId v = 0; v < raw.vertices.size(); ++v) {
    if (raw.vertices[v].edge_label) labels[v] = *raw.vertices[v].edge_label;
  }
  return EdgeLabeledTree(Tree::build(raw), std::move(labels));
}

EdgeLabeledTree::EdgeLabeledTree(Tree topology, std::vector<EdgeLabel> labels)
    : topology_(std::move(topology)), labels_(std::move(labels)) {
  if (labels_.size() != topology_.size()) {
    throw StructuralError("edge labeling does not cover the tree");
  }
}

EdgeLabel EdgeLabeledTree::edge_label(VertexId v) const {
  if (v >= topology_.size()) throw DomainError("vertex id out of range");
  if (v == topology_.root()) throw DomainError("the root has no incoming edge");
  return labels_[v];
}

RawTree EdgeLabeledTree::to_raw() const {
  RawTree raw = topology_.to_raw();
  for (VertexId v = 0; v < topology_.size(); ++v) {
    if (v != topology_.root()) raw.vertices[v].edge_label = labels_[v];
  }
  return raw;
}

VertexId lca(const Tree& tree, VertexId u, VertexId v) {
  if (u >= tree.size() || v >= tree.size()) throw DomainError("lca: foreign vertex");
  while (tree.depth(u) > tree.depth(v)) u = tree.parent(u);
  while (tree.depth(v) > tree.depth(u)) v = tree.parent(v);
  while (u != v) {
    u = tree.parent(u);
    v = tree.parent(v);
  }
  return u;
}

VertexId lca(const Tree& tree, std::span<const VertexId> vertices) {
  if (vertices.empty()) throw DomainError("lca of an empty vertex set");
  VertexId acc = vertices.front();
  if (acc >= tree.size()) throw DomainError("lca: foreign vertex");
  for (VertexId v : vertices.subspan(1)) acc = lca(tree, acc, v);
  return acc;
}

bool path_has_one_edge(const EdgeLabeledTree& tree, VertexId ancestor, VertexId descendant) {
  const Tree& t = tree.topology();
  if (!t.is_ancestor(ancestor, descendant)) {
    throw DomainError("path_has_one_edge: vertices are not comparable");
  }
  for (VertexId v = descendant; v != ancestor; v = t.parent(v)) {
    if (tree.is_one_edge(v)) return true;
  }
  return false;
}

Relation extract_relation(const EdgeLabeledTree& tree) {
  const Tree& t = tree.topology();
  const std::size_t n = t.leaf_labels().size();
  std::vector<IndexPair> pairs;
  for (LabelIndex x = 0; x < n; ++x) {
    for (LabelIndex y = 0; y < n; ++y) {
      if (x == y) continue;
      const VertexId top = lca(t, t.leaf(x), t.leaf(y));
      if (path_has_one_edge(tree, top, t.leaf(y))) pairs.emplace_back(x, y);
    }
  }
  return Relation(t.leaf_labels(), pairs);
}

bool explains(const EdgeLabeledTree& tree, const Relation& relation) {
  if (!(tree.leaf_labels() == relation.labels())) {
    throw DomainError("leaf set of the tree differs from the relation's label set");
  }
  return extract_relation(tree) == relation;
}

bool is_coarsement(const Tree& coarse, const Tree& fine) {
  if (!(coarse.leaf_labels() == fine.leaf_labels())) {
    throw DomainError("coarsement test needs trees on the same leaf set");
  }
  const ClusterFamily a = clusters_of_tree(coarse);
  const ClusterFamily b = clusters_of_tree(fine);
  if (a.size() >= b.size()) return false;
  for (const auto& c : a.sets()) {
    if (!b.contains(c)) return false;
  }
  return true;
}

bool is_least_resolved(const EdgeLabeledTree& tree, const Relation& relation) {
  if (!explains(tree, relation)) {
    throw ContractError("is_least_resolved: the tree does not explain the relation");
  }
  const Tree& t = tree.topology();
  for (VertexId v = 0; v < t.size(); ++v) {
    if (v == t.root() || t.is_leaf(v)) continue;
    // (par(v), v) is an inner edge.
    if (!tree.is_one_edge(v)) return false;
    bool outer_zero = false;
    for (VertexId c : t.children(v)) {
      if (t.is_leaf(c) && !tree.is_one_edge(c)) outer_zero = true;
    }
    if (!outer_zero) return false;
  }
  return true;
}

}  // namespace fitch
