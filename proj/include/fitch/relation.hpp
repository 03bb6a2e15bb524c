#pragma once

// Irreflexive binary relations on a finite label set.
//
// A Relation doubles as a directed graph on its labels. Labels are opaque
// strings kept in lexicographic order; everything downstream refers to a
// label by its position in that order (LabelIndex). Subsets of labels are
// sorted, duplicate-free index vectors (IndexSet), so comparing two subsets
// with operator< orders them lexicographically by label.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fitch {

using LabelIndex = std::size_t;
using IndexSet = std::vector<LabelIndex>;
using IndexPair = std::pair<LabelIndex, LabelIndex>;

bool is_subset(const IndexSet& inner, const IndexSet& outer);
IndexSet set_intersection(const IndexSet& lhs, const IndexSet& rhs);
bool contains(const IndexSet& set, LabelIndex x);

class LabelSet {
 public:
  LabelSet() = default;
  // Sorts the labels. Throws DomainError on duplicates.
  explicit LabelSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& operator[](LabelIndex i) const { return labels_[i]; }
  const std::vector<std::string>& names() const { return labels_; }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

  bool contains(std::string_view label) const;
  std::optional<LabelIndex> find(std::string_view label) const;
  // Throws DomainError for unknown labels.
  LabelIndex index_of(std::string_view label) const;
  std::vector<std::string> names_of(const IndexSet& set) const;
  IndexSet all() const;

  friend bool operator==(const LabelSet& lhs, const LabelSet& rhs) {
    return lhs.labels_ == rhs.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, LabelIndex> index_;
};

class Relation {
 public:
  Relation() = default;
  // The empty relation on `labels`.
  explicit Relation(LabelSet labels);
  // Throws DomainError on reflexive or out-of-range pairs. Repeated pairs
  // collapse.
  Relation(LabelSet labels, const std::vector<IndexPair>& pairs);

  static Relation from_names(
      LabelSet labels,
      const std::vector<std::pair<std::string, std::string>>& pairs);
  // irr(L x L)
  static Relation complete(LabelSet labels);

  const LabelSet& labels() const { return labels_; }
  std::size_t size() const { return pair_count_; }
  bool empty() const { return pair_count_ == 0; }

  bool contains(LabelIndex x, LabelIndex y) const {
    return x != y && matrix_[x * labels_.size() + y] != 0;
  }
  bool contains(std::string_view x, std::string_view y) const;

  // All pairs, ordered lexicographically.
  std::vector<IndexPair> pairs() const;

  friend bool operator==(const Relation& lhs, const Relation& rhs) {
    return lhs.labels_ == rhs.labels_ && lhs.matrix_ == rhs.matrix_;
  }

 private:
  LabelSet labels_;
  std::vector<unsigned char> matrix_;
  std::size_t pair_count_ = 0;
};

struct NeighborhoodFamily {
  // of_label[y] = N[y]
  std::vector<IndexSet> of_label;
  // N[X]: the distinct neighborhoods in ascending order.
  std::vector<IndexSet> family;
};

// N[y] = {x != y : (x,y) not in X} + {y}
IndexSet neighborhood(const Relation& relation, LabelIndex y);
IndexSet neighborhood(const Relation& relation, std::string_view y);

NeighborhoodFamily neighborhood_family(const Relation& relation);

// The subrelation induced by `subset`, re-indexed onto its own label set.
Relation induced(const Relation& relation, const std::vector<std::string>& subset);
Relation induced(const Relation& relation, const IndexSet& subset);

// A triple (a,b,c) of distinct labels with (c,b) in X and (a,b) not in X.
struct Triple {
  LabelIndex a = 0;
  LabelIndex b = 0;
  LabelIndex c = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// Scans ordered triples (a,b,c) lexicographically and returns the first one
// where (c,b) in X and (a,b) not in X, but (c,a) is missing or exactly one of
// (a,c), (b,c) is present. nullopt means every triple is fine.
std::optional<Triple> check_triangle_condition(const Relation& relation);

}  // namespace fitch
