#include "fitch/tree.hpp"

#include <algorithm>
#include <map>

#include "fitch/errors.hpp"

namespace fitch {

const char* to_string(DefectKind kind) {
  switch (kind) {
    case DefectKind::empty: return "empty tree";
    case DefectKind::dangling_parent: return "dangling parent";
    case DefectKind::disconnected: return "disconnected";
    case DefectKind::cycle: return "cycle";
    case DefectKind::root_degree: return "root degree < 2";
    case DefectKind::inner_degree: return "inner vertex degree < 3";
    case DefectKind::missing_leaf_label: return "missing leaf label";
    case DefectKind::duplicate_leaf_label: return "duplicate leaf label";
    case DefectKind::missing_edge_label: return "missing edge label";
    case DefectKind::root_edge_label: return "root edge label";
  }
  return "unknown defect";
}

namespace {

TreeDefect defect(DefectKind kind, VertexId v, const std::string& detail = {}) {
  std::string msg = to_string(kind);
  if (v != no_vertex) msg += " at vertex " + std::to_string(v);
  if (!detail.empty()) msg += ": " + detail;
  return {kind, v, msg};
}

}  // namespace

std::optional<TreeDefect> validate_topology(const RawTree& raw) {
  const auto& vs = raw.vertices;
  const std::size_t n = vs.size();
  if (n == 0) return defect(DefectKind::empty, no_vertex);

  std::vector<VertexId> roots;
  std::vector<std::vector<VertexId>> children(n);
  for (VertexId v = 0; v < n; ++v) {
    if (!vs[v].parent) {
      roots.push_back(v);
      continue;
    }
    const VertexId p = *vs[v].parent;
    if (p >= n) return defect(DefectKind::dangling_parent, v);
    if (p == v) return defect(DefectKind::cycle, v, "vertex is its own parent");
    children[p].push_back(v);
  }
  if (roots.empty()) return defect(DefectKind::cycle, no_vertex, "no root");
  if (roots.size() > 1) {
    return defect(DefectKind::disconnected, roots[1],
                  std::to_string(roots.size()) + " roots");
  }

  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{roots.front()};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    seen[v] = true;
    for (VertexId c : children[v]) stack.push_back(c);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!seen[v]) return defect(DefectKind::cycle, v, "not reachable from the root");
  }

  const VertexId root = roots.front();
  if (children[root].size() < 2) return defect(DefectKind::root_degree, root);
  for (VertexId v = 0; v < n; ++v) {
    if (v != root && children[v].size() == 1) return defect(DefectKind::inner_degree, v);
  }

  std::map<std::string, VertexId> leaf_names;
  for (VertexId v = 0; v < n; ++v) {
    if (!children[v].empty()) continue;
    if (vs[v].name.empty()) return defect(DefectKind::missing_leaf_label, v);
    auto [it, inserted] = leaf_names.emplace(vs[v].name, v);
    if (!inserted) return defect(DefectKind::duplicate_leaf_label, v, "'" + vs[v].name + "'");
  }
  return std::nullopt;
}

Tree Tree::build(const RawTree& raw) {
  if (auto d = validate_topology(raw)) throw StructuralError(d->message);

  const std::size_t n = raw.vertices.size();
  Tree t;
  t.parent_.assign(n, no_vertex);
  t.children_.assign(n, {});
  t.names_.resize(n);
  t.depth_.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    const auto& rv = raw.vertices[v];
    t.names_[v] = rv.name;
    if (rv.parent) {
      t.parent_[v] = *rv.parent;
      t.children_[*rv.parent].push_back(v);
    } else {
      t.root_ = v;
    }
  }

  std::vector<std::string> leaf_names;
  for (VertexId v = 0; v < n; ++v)
    if (t.children_[v].empty()) leaf_names.push_back(t.names_[v]);
  t.leaf_labels_ = LabelSet(leaf_names);
  t.leaf_vertex_.assign(t.leaf_labels_.size(), no_vertex);

  // Preorder, then clusters bottom-up in reverse preorder.
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<VertexId> stack{t.root_};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (VertexId c : t.children_[v]) {
      t.depth_[c] = t.depth_[v] + 1;
      stack.push_back(c);
    }
  }
  t.clusters_.assign(n, {});
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    if (t.children_[v].empty()) {
      const LabelIndex x = t.leaf_labels_.index_of(t.names_[v]);
      t.leaf_vertex_[x] = v;
      t.clusters_[v] = {x};
      continue;
    }
    IndexSet merged;
    for (VertexId c : t.children_[v]) {
      merged.insert(merged.end(), t.clusters_[c].begin(), t.clusters_[c].end());
    }
    std::sort(merged.begin(), merged.end());
    t.clusters_[v] = std::move(merged);
  }
  return t;
}

std::optional<VertexId> Tree::find_cluster(const IndexSet& cluster) const {
  for (VertexId v = 0; v < size(); ++v) {
    if (clusters_[v] == cluster) return v;
  }
  return std::nullopt;
}

bool Tree::is_ancestor(VertexId u, VertexId v) const {
  if (u >= size() || v >= size()) throw DomainError("vertex id out of range");
  while (depth_[v] > depth_[u]) v = parent_[v];
  return u == v;
}

RawTree Tree::to_raw() const {
  RawTree raw;
  raw.vertices.resize(size());
  for (VertexId v = 0; v < size(); ++v) {
    if (v != root_) raw.vertices[v].parent = parent_[v];
    raw.vertices[v].name = names_[v];
  }
  return raw;
}

}  // namespace fitch
