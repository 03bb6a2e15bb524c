#include "fitch/recognition.hpp"

#include <algorithm>

#include "fitch/errors.hpp"

namespace fitch {

namespace {

std::string describe(const LabelSet& labels, const NeighborhoodWitness& witness) {
  auto set = [&](const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + labels[s[i]];
    return out + "}";
  };
  if (const auto* o = std::get_if<OverlapWitness>(&witness)) {
    return "neighborhoods " + set(o->first) + " and " + set(o->second) + " overlap";
  }
  const auto& ic = std::get<InequalityWitness>(witness);
  return "|N[" + labels[ic.member] + "]| exceeds |" + set(ic.neighborhood) + "|";
}

}  // namespace

std::optional<OverlapWitness> satisfies_hlc(const Relation& relation) {
  const auto family = neighborhood_family(relation);
  const ClusterFamily clusters(relation.labels(), family.family);
  if (auto pair = is_hierarchy_like(clusters)) {
    return OverlapWitness{std::move(pair->first), std::move(pair->second)};
  }
  return std::nullopt;
}

std::optional<InequalityWitness> satisfies_ic(const Relation& relation) {
  const auto family = neighborhood_family(relation);
  for (const IndexSet& n : family.family) {
    for (LabelIndex y : n) {
      if (family.of_label[y].size() > n.size()) return InequalityWitness{n, y};
    }
  }
  return std::nullopt;
}

Verdict is_fitch_neighborhood(const Relation& relation) {
  Verdict verdict;
  if (auto overlap = satisfies_hlc(relation)) {
    verdict.neighborhood = std::move(*overlap);
  } else if (auto ic = satisfies_ic(relation)) {
    verdict.neighborhood = std::move(*ic);
  }
  if (verdict.neighborhood) verdict.status = Status::not_fitch;
  return verdict;
}

Verdict is_fitch_triangles(const Relation& relation) {
  Verdict verdict;
  verdict.triangle = check_triangle_condition(relation);
  if (verdict.triangle) verdict.status = Status::not_fitch;
  return verdict;
}

EdgeLabeledTree least_resolved_tree(const Relation& relation) {
  const LabelSet& labels = relation.labels();
  if (labels.size() < 2) throw DomainError("least-resolved trees need at least two labels");
  const Verdict verdict = is_fitch_neighborhood(relation);
  if (!verdict.is_fitch()) {
    throw ContractError("not a Fitch relation: " + describe(labels, *verdict.neighborhood));
  }

  const auto family = neighborhood_family(relation);
  ClusterFamily hierarchy(labels, family.family);
  hierarchy.insert(labels.all());
  for (LabelIndex x = 0; x < labels.size(); ++x) hierarchy.insert({x});

  Tree topology = tree_from_hierarchy(hierarchy);
  std::vector<EdgeLabel> edge_labels(topology.size(), EdgeLabel::zero);
  for (VertexId v = 0; v < topology.size(); ++v) {
    if (v == topology.root()) continue;
    if (std::binary_search(family.family.begin(), family.family.end(), topology.cluster(v))) {
      edge_labels[v] = EdgeLabel::one;
    }
  }
  return EdgeLabeledTree(std::move(topology), std::move(edge_labels));
}

Verdict explain(const Relation& relation) {
  Verdict by_triangles = is_fitch_triangles(relation);
  Verdict verdict = is_fitch_neighborhood(relation);
  if (verdict.status != by_triangles.status) {
    throw InvariantViolation(
        "triangle and neighborhood recognizers disagree on a relation over " +
        std::to_string(relation.labels().size()) + " labels");
  }
  verdict.triangle = by_triangles.triangle;
  if (verdict.is_fitch() && relation.labels().size() >= 2) {
    verdict.tree = least_resolved_tree(relation);
  }
  return verdict;
}

}  // namespace fitch
