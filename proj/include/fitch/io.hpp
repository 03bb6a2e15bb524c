#pragma once

// Serialization formats.
//
// Relation JSON:  {"labels":["a","b","c"],"pairs":[["c","b"]]}
// Edge list:      optional "#labels: a b c" header, then one "x<TAB>y" pair
//                 per line; other lines starting with '#' are comments.
// Newick:         rooted Newick whose branch-length slot holds the edge label,
//                 literally 0 or 1, on every non-root edge, e.g.
//                 ((5:0,6:0)v:1,1:1,2:0)u;
// DOT:            output only; 1-edges solid, 0-edges dashed.
//
// Writers are canonical: sorted labels and pairs, no insignificant
// whitespace, so parse(write(x)) followed by write is byte-identical.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fitch/oracle.hpp"
#include "fitch/phylo.hpp"
#include "fitch/relation.hpp"

namespace fitch::io {

Relation parse_relation_json(std::string_view text);
std::string write_relation_json(const Relation& relation);
nlohmann::json relation_to_json(const Relation& relation);

Relation parse_edge_list(std::string_view text);
// Throws DomainError for labels the format cannot carry (empty, containing
// whitespace, or starting with '#').
std::string write_edge_list(const Relation& relation);

// Syntax errors throw ParseError with a byte offset; a well-formed string
// describing an invalid tree throws StructuralError.
EdgeLabeledTree parse_newick(std::string_view text);
std::string write_newick(const EdgeLabeledTree& tree);

std::string write_dot(const EdgeLabeledTree& tree);

nlohmann::json catalog_to_json(const std::vector<oracle::TriangleClass>& catalog);

}  // namespace fitch::io
