#pragma once

// Shared fixtures and generators for the test suites.

#include <random>
#include <string>
#include <vector>

#include "fitch/io.hpp"
#include "fitch/phylo.hpp"
#include "fitch/relation.hpp"

namespace fitch::testing {

inline LabelSet labels_of(std::initializer_list<const char*> names) {
  return LabelSet(std::vector<std::string>(names.begin(), names.end()));
}

inline LabelSet numbered_labels(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
  return LabelSet(names);
}

inline Relation relation_of(std::initializer_list<const char*> names,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
  return Relation::from_names(labels_of(names), pairs);
}

inline EdgeLabeledTree newick(const std::string& text) { return io::parse_newick(text); }

// Every relation on `labels`, indexed by the bits of its off-diagonal pairs.
inline Relation relation_from_code(const LabelSet& labels, std::uint64_t code) {
  std::vector<IndexPair> pairs;
  std::size_t bit = 0;
  for (LabelIndex x = 0; x < labels.size(); ++x) {
    for (LabelIndex y = 0; y < labels.size(); ++y) {
      if (x == y) continue;
      if (code >> bit & 1) pairs.emplace_back(x, y);
      ++bit;
    }
  }
  return Relation(labels, pairs);
}

inline std::uint64_t relation_count(std::size_t n) {
  return std::uint64_t{1} << (n * (n - 1));
}

// Each off-diagonal pair independently with probability 1/2.
inline Relation random_relation(const LabelSet& labels, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<IndexPair> pairs;
  for (LabelIndex x = 0; x < labels.size(); ++x)
    for (LabelIndex y = 0; y < labels.size(); ++y)
      if (x != y && coin(rng)) pairs.emplace_back(x, y);
  return Relation(labels, pairs);
}

// Random phylogenetic tree by leaf insertion: each new leaf either joins an
// existing inner vertex or subdivides an edge. Edge labels are fair coins.
inline EdgeLabeledTree random_tree(const LabelSet& labels, std::mt19937_64& rng,
                                   double one_probability = 0.5) {
  RawTree raw;
  const VertexId root = raw.add(std::nullopt);
  raw.add(root, labels[0]);
  raw.add(root, labels[1]);
  for (std::size_t i = 2; i < labels.size(); ++i) {
    std::vector<VertexId> inner;
    std::vector<char> has_child(raw.vertices.size(), 0);
    for (const auto& v : raw.vertices)
      if (v.parent) has_child[*v.parent] = 1;
    for (VertexId v = 0; v < raw.vertices.size(); ++v)
      if (has_child[v]) inner.push_back(v);

    std::uniform_int_distribution<std::size_t> pick(0, raw.vertices.size() - 1);
    std::bernoulli_distribution join(0.3);
    if (join(rng)) {
      std::uniform_int_distribution<std::size_t> pick_inner(0, inner.size() - 1);
      raw.add(inner[pick_inner(rng)], labels[i]);
      continue;
    }
    VertexId target = pick(rng);
    if (target == root) {
      raw.add(root, labels[i]);
      continue;
    }
    const VertexId middle = raw.add(raw.vertices[target].parent);
    raw.vertices[target].parent = middle;
    raw.add(middle, labels[i]);
  }
  std::bernoulli_distribution coin(one_probability);
  for (auto& v : raw.vertices) {
    if (v.parent) v.edge_label = coin(rng) ? EdgeLabel::one : EdgeLabel::zero;
  }
  return EdgeLabeledTree::build(raw);
}

}  // namespace fitch::testing
