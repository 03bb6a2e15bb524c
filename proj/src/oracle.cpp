#include "fitch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "fitch/errors.hpp"

namespace fitch::oracle {

namespace {

using Mask = std::uint32_t;

void require_enumerable(std::size_t n, std::size_t max) {
  if (n < 2 || n > max) {
    throw DomainError("oracle supports 2.." + std::to_string(max) + " labels, got " +
                      std::to_string(n));
  }
}

// Non-trivial clusters of every hierarchy on n labels, by backtracking over
// pairwise-compatible subsets.
std::vector<std::vector<Mask>> nontrivial_families(std::size_t n) {
  std::vector<Mask> candidates;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask m = 1; m < full; ++m) {
    if (std::popcount(m) >= 2) candidates.push_back(m);
  }
  auto compatible = [](Mask a, Mask b) {
    const Mask c = a & b;
    return c == 0 || c == a || c == b;
  };

  std::vector<std::vector<Mask>> out;
  std::vector<Mask> chosen;
  auto search = [&](auto&& self, std::size_t next) -> void {
    out.push_back(chosen);
    for (std::size_t i = next; i < candidates.size(); ++i) {
      const Mask m = candidates[i];
      if (!std::all_of(chosen.begin(), chosen.end(),
                       [&](Mask c) { return compatible(c, m); })) {
        continue;
      }
      chosen.push_back(m);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  search(search, 0);
  return out;
}

// Edges of the tree as the clusters below them: non-trivial clusters, then
// singletons.
std::vector<Mask> edge_clusters(const std::vector<Mask>& nontrivial, std::size_t n) {
  std::vector<Mask> edges = nontrivial;
  for (std::size_t x = 0; x < n; ++x) edges.push_back(Mask{1} << x);
  return edges;
}

// sep[x*n+y]: edges whose cluster contains y but not x.
std::vector<Mask> separators(const std::vector<Mask>& edges, std::size_t n) {
  std::vector<Mask> sep(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if ((edges[i] >> y & 1) && !(edges[i] >> x & 1)) sep[x * n + y] |= Mask{1} << i;
      }
    }
  }
  return sep;
}

Mask induced_code(const std::vector<Mask>& sep, Mask labeling) {
  Mask code = 0;
  for (std::size_t p = 0; p < sep.size(); ++p) {
    if (sep[p] & labeling) code |= Mask{1} << p;
  }
  return code;
}

Mask encode_relation(const Relation& relation) {
  const std::size_t n = relation.labels().size();
  Mask code = 0;
  for (auto [x, y] : relation.pairs()) code |= Mask{1} << (x * n + y);
  return code;
}

ClusterFamily to_family(const LabelSet& labels, const std::vector<Mask>& edges) {
  ClusterFamily family(labels);
  family.insert(labels.all());
  for (Mask m : edges) {
    IndexSet s;
    for (std::size_t x = 0; x < labels.size(); ++x)
      if (m >> x & 1) s.push_back(x);
    family.insert(std::move(s));
  }
  return family;
}

EdgeLabeledTree build_tree(const LabelSet& labels, const std::vector<Mask>& edges,
                           Mask labeling) {
  const std::size_t n = labels.size();
  const Mask full = (Mask{1} << n) - 1;
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(edges[a]) > std::popcount(edges[b]);
  });

  RawTree raw;
  const VertexId root = raw.add(std::nullopt);
  std::vector<std::pair<Mask, VertexId>> placed{{full, root}};
  for (std::size_t i : order) {
    const Mask m = edges[i];
    VertexId parent = root;
    int best = std::popcount(full) + 1;
    for (auto [pm, pv] : placed) {
      if (pm != m && (pm & m) == m && std::popcount(pm) < best) {
        best = std::popcount(pm);
        parent = pv;
      }
    }
    std::string name;
    if (std::popcount(m) == 1) name = labels[static_cast<std::size_t>(std::countr_zero(m))];
    const auto label = (labeling >> i & 1) ? EdgeLabel::one : EdgeLabel::zero;
    placed.emplace_back(m, raw.add(parent, std::move(name), label));
  }
  return EdgeLabeledTree::build(raw);
}

// Set of non-trivial clusters as a bitset indexed by cluster mask.
std::uint64_t cluster_signature(const std::vector<Mask>& edges) {
  std::uint64_t sig = 0;
  for (Mask m : edges) sig |= std::uint64_t{1} << m;
  return sig;
}

std::string encode_subtree(const EdgeLabeledTree& tree, VertexId v) {
  const Tree& t = tree.topology();
  if (t.is_leaf(v)) return "'" + t.name(v) + "'";
  std::vector<std::string> parts;
  for (VertexId c : t.children(v)) {
    parts.push_back(encode_subtree(tree, c) + (tree.is_one_edge(c) ? ":1" : ":0"));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out + ")";
}

}  // namespace

std::vector<ClusterFamily> enumerate_hierarchies(const LabelSet& labels) {
  require_enumerable(labels.size(), max_enumeration_labels);
  std::vector<ClusterFamily> out;
  for (const auto& nontrivial : nontrivial_families(labels.size())) {
    out.push_back(to_family(labels, edge_clusters(nontrivial, labels.size())));
  }
  return out;
}

std::vector<EdgeLabeledTree> enumerate_labelings(const Tree& tree) {
  std::vector<VertexId> edges;
  for (VertexId v = 0; v < tree.size(); ++v)
    if (v != tree.root()) edges.push_back(v);
  if (edges.size() >= 20) throw DomainError("too many edges to enumerate labelings");

  std::vector<EdgeLabeledTree> out;
  const std::uint32_t total = std::uint32_t{1} << edges.size();
  out.reserve(total);
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    std::vector<EdgeLabel> labels(tree.size(), EdgeLabel::zero);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (bits >> i & 1) labels[edges[i]] = EdgeLabel::one;
    }
    out.emplace_back(tree, std::move(labels));
  }
  return out;
}

bool oracle_is_fitch(const Relation& relation) {
  const std::size_t n = relation.labels().size();
  require_enumerable(n, max_enumeration_labels);
  const Mask target = encode_relation(relation);
  for (const auto& nontrivial : nontrivial_families(n)) {
    const auto edges = edge_clusters(nontrivial, n);
    const auto sep = separators(edges, n);
    for (Mask labeling = 0; labeling < (Mask{1} << edges.size()); ++labeling) {
      if (induced_code(sep, labeling) == target) return true;
    }
  }
  return false;
}

std::vector<EdgeLabeledTree> oracle_least_resolved_trees(const Relation& relation) {
  require_enumerable(relation.labels().size(), max_least_resolved_labels);
  return ExplanationAtlas(relation.labels()).least_resolved_trees(relation);
}

bool digraph_iso(const Relation& lhs, const Relation& rhs) {
  const std::size_t n = lhs.labels().size();
  if (n > max_iso_labels || rhs.labels().size() > max_iso_labels) {
    throw DomainError("digraph_iso supports at most " + std::to_string(max_iso_labels) +
                      " labels");
  }
  if (n != rhs.labels().size() || lhs.size() != rhs.size()) return false;

  const auto pairs = lhs.pairs();
  std::vector<LabelIndex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = std::all_of(pairs.begin(), pairs.end(), [&](const IndexPair& p) {
      return rhs.contains(perm[p.first], perm[p.second]);
    });
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string canonical_form(const EdgeLabeledTree& tree) {
  return encode_subtree(tree, tree.topology().root());
}

bool tree_iso(const EdgeLabeledTree& lhs, const EdgeLabeledTree& rhs) {
  if (!(lhs.leaf_labels() == rhs.leaf_labels())) {
    throw DomainError("tree_iso needs trees on the same leaf set");
  }
  return canonical_form(lhs) == canonical_form(rhs);
}

std::vector<TriangleClass> derive_triangle_catalog() {
  const LabelSet labels({"x", "y", "z"});
  std::vector<IndexPair> slots;
  for (LabelIndex x = 0; x < 3; ++x)
    for (LabelIndex y = 0; y < 3; ++y)
      if (x != y) slots.push_back({x, y});

  struct Group {
    Relation representative;
    unsigned code;
    std::size_t members;
  };
  std::vector<Group> groups;
  for (unsigned code = 0; code < (1u << slots.size()); ++code) {
    std::vector<IndexPair> pairs;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (code >> i & 1) pairs.push_back(slots[i]);
    Relation r(labels, pairs);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return digraph_iso(g.representative, r);
    });
    // Codes ascend, so the first member seen has the smallest encoding.
    if (it == groups.end()) {
      groups.push_back({std::move(r), code, 1});
    } else {
      ++it->members;
    }
  }

  std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    if (a.representative.size() != b.representative.size()) {
      return a.representative.size() < b.representative.size();
    }
    return a.code < b.code;
  });

  std::vector<TriangleClass> out;
  int allowed = 0;
  int forbidden = 0;
  for (auto& g : groups) {
    TriangleClass c;
    c.allowed = oracle_is_fitch(g.representative);
    c.name = c.allowed ? "A" + std::to_string(++allowed) : "F" + std::to_string(++forbidden);
    c.representative = std::move(g.representative);
    c.member_count = g.members;
    out.push_back(std::move(c));
  }
  return out;
}

ExplanationAtlas::ExplanationAtlas(LabelSet labels) : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  require_enumerable(n, max_enumeration_labels);
  for (const auto& nontrivial : nontrivial_families(n)) {
    const auto edges = edge_clusters(nontrivial, n);
    const auto sep = separators(edges, n);
    const std::size_t h = hierarchies_.size();
    hierarchies_.push_back(to_family(labels_, edges));
    cluster_masks_.push_back(edges);
    for (Mask labeling = 0; labeling < (Mask{1} << edges.size()); ++labeling) {
      by_relation_[induced_code(sep, labeling)].push_back({h, labeling});
      ++labeled_count_;
    }
  }
}

std::uint32_t ExplanationAtlas::encode(const Relation& relation) const {
  if (!(relation.labels() == labels_)) {
    throw DomainError("relation is not over the atlas label set");
  }
  return encode_relation(relation);
}

bool ExplanationAtlas::is_fitch(const Relation& relation) const {
  return by_relation_.count(encode(relation)) != 0;
}

EdgeLabeledTree ExplanationAtlas::materialize(const LabeledHierarchy& entry) const {
  return build_tree(labels_, cluster_masks_.at(entry.hierarchy), entry.labeling);
}

std::vector<EdgeLabeledTree> ExplanationAtlas::explaining_trees(const Relation& relation) const {
  std::vector<EdgeLabeledTree> out;
  auto it = by_relation_.find(encode(relation));
  if (it == by_relation_.end()) return out;
  for (const auto& entry : it->second) out.push_back(materialize(entry));
  return out;
}

std::vector<EdgeLabeledTree> ExplanationAtlas::least_resolved_trees(
    const Relation& relation) const {
  if (labels_.size() > max_least_resolved_labels) {
    throw DomainError("least-resolved search supports at most " +
                      std::to_string(max_least_resolved_labels) + " labels");
  }
  auto it = by_relation_.find(encode(relation));
  if (it == by_relation_.end()) {
    throw ContractError("no edge-labeled tree explains the relation");
  }

  // Topologies admitting some explaining labeling.
  std::set<std::uint64_t> explaining;
  for (const auto& entry : it->second) {
    explaining.insert(cluster_signature(cluster_masks_[entry.hierarchy]));
  }

  std::vector<EdgeLabeledTree> out;
  std::set<std::string> seen;
  for (const auto& entry : it->second) {
    const std::uint64_t sig = cluster_signature(cluster_masks_[entry.hierarchy]);
    const bool has_coarsement = std::any_of(
        explaining.begin(), explaining.end(),
        [&](std::uint64_t other) { return other != sig && (other & sig) == other; });
    if (has_coarsement) continue;
    EdgeLabeledTree tree = materialize(entry);
    if (seen.insert(canonical_form(tree)).second) out.push_back(std::move(tree));
  }
  return out;
}

std::vector<EdgeLabeledTree> ExplanationAtlas::all_labeled_trees() const {
  std::vector<EdgeLabeledTree> out;
  out.reserve(labeled_count_);
  for (std::size_t h = 0; h < hierarchies_.size(); ++h) {
    for (Mask labeling = 0; labeling < (Mask{1} << cluster_masks_[h].size()); ++labeling) {
      out.push_back(materialize({h, labeling}));
    }
  }
  return out;
}

}  // namespace fitch::oracle
