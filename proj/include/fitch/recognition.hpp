#pragma once

// Recognition of Fitch relations and construction of their least-resolved
// trees.
//
// Two independent recognizers are provided:
//  - the neighborhood route: N[X] must be hierarchy-like (HLC) and every
//    y in a neighborhood N must satisfy |N[y]| <= |N| (IC);
//  - the triangle route: whenever (c,b) in X and (a,b) not in X, also
//    (c,a) in X, and (a,c), (b,c) are both present or both absent.
// Both decide the same class; explain() runs both and treats disagreement
// as an InvariantViolation.
//
// All recognizers are O(|L|^3) at worst (O(|L|^2) neighborhoods plus
// pairwise set comparisons), against the linear-time bound known for the
// problem. Fine for the sizes this library targets.

#include <optional>
#include <variant>

#include "fitch/hierarchy.hpp"
#include "fitch/phylo.hpp"
#include "fitch/relation.hpp"

namespace fitch {

// Two neighborhoods that overlap without nesting.
struct OverlapWitness {
  IndexSet first;
  IndexSet second;
  friend bool operator==(const OverlapWitness&, const OverlapWitness&) = default;
};

// A neighborhood N and a member y with |N[y]| > |N|.
struct InequalityWitness {
  IndexSet neighborhood;
  LabelIndex member = 0;
  friend bool operator==(const InequalityWitness&, const InequalityWitness&) = default;
};

using NeighborhoodWitness = std::variant<OverlapWitness, InequalityWitness>;

enum class Status { fitch, not_fitch };

struct Verdict {
  Status status = Status::fitch;
  std::optional<Triple> triangle;
  std::optional<NeighborhoodWitness> neighborhood;
  // Attached by explain() for Fitch relations on two or more labels.
  std::optional<EdgeLabeledTree> tree;

  bool is_fitch() const { return status == Status::fitch; }
};

std::optional<OverlapWitness> satisfies_hlc(const Relation& relation);
std::optional<InequalityWitness> satisfies_ic(const Relation& relation);

// HLC is checked first, so an overlap witness wins over an IC witness.
Verdict is_fitch_neighborhood(const Relation& relation);
Verdict is_fitch_triangles(const Relation& relation);

// T_X: clusters N[X] + {L} + singletons, (par(v), v) labeled 1 iff Cl(v) is
// a neighborhood. Throws ContractError for non-Fitch input and DomainError
// for fewer than two labels.
EdgeLabeledTree least_resolved_tree(const Relation& relation);

// Both recognizers plus, for Fitch input with |L| >= 2, the least-resolved
// tree. A single label is Fitch with no tree attached.
Verdict explain(const Relation& relation);

}  // namespace fitch
