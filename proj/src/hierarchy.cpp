#include "fitch/hierarchy.hpp"

#include <algorithm>

#include "fitch/errors.hpp"

namespace fitch {

namespace {

std::string format_set(const LabelSet& ground, const IndexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += ground[set[i]];
  }
  return out + "}";
}

}  // namespace

ClusterFamily::ClusterFamily(LabelSet ground, const std::vector<IndexSet>& sets)
    : ground_(std::move(ground)) {
  for (const auto& s : sets) insert(s);
}

ClusterFamily ClusterFamily::from_names(LabelSet ground,
                                        const std::vector<std::vector<std::string>>& sets) {
  ClusterFamily family(std::move(ground));
  for (const auto& names : sets) {
    IndexSet s;
    for (const auto& name : names) s.push_back(family.ground_.index_of(name));
    family.insert(std::move(s));
  }
  return family;
}

bool ClusterFamily::insert(IndexSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.empty()) throw DomainError("cluster families hold non-empty sets only");
  if (set.back() >= ground_.size()) throw DomainError("set member outside the ground set");
  return sets_.insert(std::move(set)).second;
}

std::optional<SetPair> is_hierarchy_like(const ClusterFamily& family) {
  const auto& sets = family.sets();
  for (auto p = sets.begin(); p != sets.end(); ++p) {
    for (auto q = std::next(p); q != sets.end(); ++q) {
      const IndexSet common = set_intersection(*p, *q);
      if (!common.empty() && common != *p && common != *q) return SetPair{*p, *q};
    }
  }
  return std::nullopt;
}

bool is_hierarchy(const ClusterFamily& family) {
  const std::size_t n = family.ground().size();
  if (n == 0 || !family.contains(family.ground().all())) return false;
  for (LabelIndex x = 0; x < n; ++x) {
    if (!family.contains({x})) return false;
  }
  return !is_hierarchy_like(family).has_value();
}

Tree tree_from_hierarchy(const ClusterFamily& hierarchy) {
  const LabelSet& ground = hierarchy.ground();
  if (ground.size() < 2) throw DomainError("phylogenetic trees need at least two leaves");
  if (auto overlap = is_hierarchy_like(hierarchy)) {
    throw StructuralError("not a hierarchy: " + format_set(ground, overlap->first) + " and " +
                          format_set(ground, overlap->second) + " overlap");
  }
  if (!is_hierarchy(hierarchy)) {
    throw StructuralError("not a hierarchy: the ground set or a singleton is missing");
  }

  const std::vector<IndexSet> sets(hierarchy.sets().begin(), hierarchy.sets().end());
  const std::size_t m = sets.size();
  std::vector<std::size_t> parent(m, m);
  std::vector<std::vector<std::size_t>> children(m);
  std::size_t root = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (sets[i].size() == ground.size()) {
      root = i;
      continue;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (sets[j].size() <= sets[i].size() || !is_subset(sets[i], sets[j])) continue;
      if (parent[i] == m || sets[j].size() < sets[parent[i]].size()) parent[i] = j;
    }
    children[parent[i]].push_back(i);
  }
  // Siblings are disjoint, so ordering by the front element orders them by
  // their smallest leaf label.
  for (auto& c : children) {
    std::sort(c.begin(), c.end(),
              [&](std::size_t a, std::size_t b) { return sets[a].front() < sets[b].front(); });
  }

  RawTree raw;
  std::vector<std::pair<std::size_t, std::optional<VertexId>>> stack{{root, std::nullopt}};
  while (!stack.empty()) {
    auto [i, p] = stack.back();
    stack.pop_back();
    const std::string name = sets[i].size() == 1 ? ground[sets[i].front()] : std::string{};
    const VertexId v = raw.add(p, name);
    for (auto it = children[i].rbegin(); it != children[i].rend(); ++it) stack.push_back({*it, v});
  }
  return Tree::build(raw);
}

ClusterFamily clusters_of_tree(const Tree& tree) {
  ClusterFamily family(tree.leaf_labels());
  for (VertexId v = 0; v < tree.size(); ++v) family.insert(tree.cluster(v));
  return family;
}

}  // namespace fitch
