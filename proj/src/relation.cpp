#include "fitch/relation.hpp"

#include <algorithm>
#include <iterator>

#include "fitch/errors.hpp"

namespace fitch {

bool is_subset(const IndexSet& inner, const IndexSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

IndexSet set_intersection(const IndexSet& lhs, const IndexSet& rhs) {
  IndexSet out;
  std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                        std::back_inserter(out));
  return out;
}

bool contains(const IndexSet& set, LabelIndex x) {
  return std::binary_search(set.begin(), set.end(), x);
}

LabelSet::LabelSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  auto dup = std::adjacent_find(labels_.begin(), labels_.end());
  if (dup != labels_.end()) {
    throw DomainError("duplicate label '" + *dup + "'");
  }
  index_.reserve(labels_.size());
  for (LabelIndex i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

bool LabelSet::contains(std::string_view label) const {
  return find(label).has_value();
}

std::optional<LabelIndex> LabelSet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LabelIndex LabelSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw DomainError("unknown label '" + std::string(label) + "'");
}

std::vector<std::string> LabelSet::names_of(const IndexSet& set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (LabelIndex i : set) out.push_back(labels_.at(i));
  return out;
}

IndexSet LabelSet::all() const {
  IndexSet out(labels_.size());
  for (LabelIndex i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

Relation::Relation(LabelSet labels)
    : labels_(std::move(labels)), matrix_(labels_.size() * labels_.size(), 0) {}

Relation::Relation(LabelSet labels, const std::vector<IndexPair>& pairs)
    : Relation(std::move(labels)) {
  const std::size_t n = labels_.size();
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw DomainError("pair refers to a label outside the label set");
    if (x == y) throw DomainError("reflexive pair (" + labels_[x] + "," + labels_[x] + ")");
    auto& cell = matrix_[x * n + y];
    if (cell == 0) {
      cell = 1;
      ++pair_count_;
    }
  }
}

Relation Relation::from_names(
    LabelSet labels, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<IndexPair> indexed;
  indexed.reserve(pairs.size());
  for (const auto& [x, y] : pairs) {
    indexed.emplace_back(labels.index_of(x), labels.index_of(y));
  }
  return Relation(std::move(labels), indexed);
}

Relation Relation::complete(LabelSet labels) {
  std::vector<IndexPair> pairs;
  for (LabelIndex x = 0; x < labels.size(); ++x)
    for (LabelIndex y = 0; y < labels.size(); ++y)
      if (x != y) pairs.emplace_back(x, y);
  return Relation(std::move(labels), pairs);
}

bool Relation::contains(std::string_view x, std::string_view y) const {
  return contains(labels_.index_of(x), labels_.index_of(y));
}

std::vector<IndexPair> Relation::pairs() const {
  std::vector<IndexPair> out;
  out.reserve(pair_count_);
  const std::size_t n = labels_.size();
  for (LabelIndex x = 0; x < n; ++x)
    for (LabelIndex y = 0; y < n; ++y)
      if (contains(x, y)) out.emplace_back(x, y);
  return out;
}

IndexSet neighborhood(const Relation& relation, LabelIndex y) {
  const std::size_t n = relation.labels().size();
  if (y >= n) throw DomainError("label index out of range");
  IndexSet out;
  for (LabelIndex x = 0; x < n; ++x) {
    if (x == y || !relation.contains(x, y)) out.push_back(x);
  }
  return out;
}

IndexSet neighborhood(const Relation& relation, std::string_view y) {
  return neighborhood(relation, relation.labels().index_of(y));
}

NeighborhoodFamily neighborhood_family(const Relation& relation) {
  NeighborhoodFamily out;
  const std::size_t n = relation.labels().size();
  out.of_label.reserve(n);
  for (LabelIndex y = 0; y < n; ++y) out.of_label.push_back(neighborhood(relation, y));
  out.family = out.of_label;
  std::sort(out.family.begin(), out.family.end());
  out.family.erase(std::unique(out.family.begin(), out.family.end()), out.family.end());
  return out;
}

Relation induced(const Relation& relation, const IndexSet& subset) {
  const auto& labels = relation.labels();
  for (LabelIndex i : subset) {
    if (i >= labels.size()) throw DomainError("induced: label index out of range");
  }
  return induced(relation, labels.names_of(subset));
}

Relation induced(const Relation& relation, const std::vector<std::string>& subset) {
  const auto& labels = relation.labels();
  LabelSet sub(subset);
  std::vector<LabelIndex> original(sub.size());
  for (LabelIndex i = 0; i < sub.size(); ++i) original[i] = labels.index_of(sub[i]);

  std::vector<IndexPair> pairs;
  for (LabelIndex x = 0; x < sub.size(); ++x)
    for (LabelIndex y = 0; y < sub.size(); ++y)
      if (relation.contains(original[x], original[y])) pairs.emplace_back(x, y);
  return Relation(std::move(sub), pairs);
}

std::optional<Triple> check_triangle_condition(const Relation& relation) {
  const std::size_t n = relation.labels().size();
  for (LabelIndex a = 0; a < n; ++a) {
    for (LabelIndex b = 0; b < n; ++b) {
      if (b == a || relation.contains(a, b)) continue;
      for (LabelIndex c = 0; c < n; ++c) {
        if (c == a || c == b || !relation.contains(c, b)) continue;
        const bool ac = relation.contains(a, c);
        const bool bc = relation.contains(b, c);
        if (!relation.contains(c, a) || ac != bc) return Triple{a, b, c};
      }
    }
  }
  return std::nullopt;
}

}  // namespace fitch
