#include "fitch/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "fitch/errors.hpp"

namespace fitch::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail_element(const std::string& where, const std::string& what,
                               std::size_t index) {
  throw ParseError(where + ": " + what, ParseError::Unit::element, index);
}

}  // namespace

Relation parse_relation_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the 1-based index of the last byte read.
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    throw ParseError("invalid JSON at byte " + std::to_string(offset), ParseError::Unit::byte,
                     offset);
  }
  if (!doc.is_object()) fail_element("document", "expected an object", 0);
  for (const auto& [key, value] : doc.items()) {
    if (key != "labels" && key != "pairs") fail_element("document", "unknown key '" + key + "'", 0);
  }
  if (!doc.contains("labels") || !doc["labels"].is_array()) {
    fail_element("labels", "expected an array of strings", 0);
  }

  std::vector<std::string> labels;
  std::set<std::string> seen;
  const auto& jl = doc["labels"];
  for (std::size_t i = 0; i < jl.size(); ++i) {
    const std::string where = "labels[" + std::to_string(i) + "]";
    if (!jl[i].is_string()) fail_element(where, "expected a string", i);
    std::string label = jl[i].get<std::string>();
    if (label.empty()) fail_element(where, "empty label", i);
    if (!seen.insert(label).second) fail_element(where, "duplicate label '" + label + "'", i);
    labels.push_back(std::move(label));
  }
  const LabelSet label_set(labels);

  std::vector<IndexPair> pairs;
  std::set<IndexPair> seen_pairs;
  if (doc.contains("pairs")) {
    const auto& jp = doc["pairs"];
    if (!jp.is_array()) fail_element("pairs", "expected an array", 0);
    for (std::size_t i = 0; i < jp.size(); ++i) {
      const std::string where = "pairs[" + std::to_string(i) + "]";
      const auto& p = jp[i];
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        fail_element(where, "expected a pair of strings", i);
      }
      const auto x = p[0].get<std::string>();
      const auto y = p[1].get<std::string>();
      auto xi = label_set.find(x);
      auto yi = label_set.find(y);
      if (!xi) fail_element(where, "unknown label '" + x + "'", i);
      if (!yi) fail_element(where, "unknown label '" + y + "'", i);
      if (*xi == *yi) fail_element(where, "reflexive pair (" + x + "," + y + ")", i);
      if (!seen_pairs.insert({*xi, *yi}).second) {
        fail_element(where, "duplicate pair (" + x + "," + y + ")", i);
      }
      pairs.emplace_back(*xi, *yi);
    }
  }
  return Relation(label_set, pairs);
}

json relation_to_json(const Relation& relation) {
  const auto& labels = relation.labels();
  json pairs = json::array();
  for (auto [x, y] : relation.pairs()) pairs.push_back({labels[x], labels[y]});
  return json{{"labels", labels.names()}, {"pairs", std::move(pairs)}};
}

std::string write_relation_json(const Relation& relation) {
  return relation_to_json(relation).dump() + "\n";
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what, ParseError::Unit::line, line);
}

}  // namespace

Relation parse_edge_list(std::string_view text) {
  std::vector<std::string> order;
  std::set<std::string> known;
  auto declare = [&](const std::string& label) {
    if (known.insert(label).second) order.push_back(label);
  };
  std::vector<std::pair<std::string, std::string>> pairs;
  std::set<std::pair<std::string, std::string>> seen;

  constexpr std::string_view header = "#labels:";
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;

    if (line.substr(0, header.size()) == header) {
      std::istringstream names{std::string(line.substr(header.size()))};
      std::set<std::string> in_header;
      for (std::string label; names >> label;) {
        if (!in_header.insert(label).second) fail_line(line_no, "duplicate label '" + label + "' in header");
        declare(label);
      }
      continue;
    }
    if (line.front() == '#') continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      fail_line(line_no, "expected exactly one tab between two labels");
    }
    std::string x(line.substr(0, tab));
    std::string y(line.substr(tab + 1));
    if (x.empty() || y.empty()) fail_line(line_no, "empty label");
    if (x == y) fail_line(line_no, "reflexive pair (" + x + "," + y + ")");
    if (!seen.insert({x, y}).second) fail_line(line_no, "duplicate pair (" + x + "," + y + ")");
    declare(x);
    declare(y);
    pairs.emplace_back(std::move(x), std::move(y));
  }
  return Relation::from_names(LabelSet(order), pairs);
}

std::string write_edge_list(const Relation& relation) {
  const auto& labels = relation.labels();
  for (const auto& label : labels) {
    const bool bad = label.empty() || label.front() == '#' ||
                     std::any_of(label.begin(), label.end(), is_space);
    if (bad) throw DomainError("label '" + label + "' cannot be written as an edge list");
  }
  std::string out = "#labels:";
  for (const auto& label : labels) out += " " + label;
  out += "\n";
  for (auto [x, y] : relation.pairs()) out += labels[x] + "\t" + labels[y] + "\n";
  return out;
}

namespace {

constexpr std::string_view newick_special = "()[]':;,";

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  RawTree parse() {
    skip_space();
    subtree(std::nullopt);
    skip_space();
    if (peek() == ':') fail("the root has no incoming edge to label");
    if (peek() != ';') fail("expected ';'");
    ++pos_;
    skip_space();
    if (pos_ != text_.size()) fail("unexpected text after ';'");
    return std::move(raw_);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("newick: " + what + " at byte " + std::to_string(pos_),
                     ParseError::Unit::byte, pos_);
  }

  void skip_space() {
    while (!at_end() && is_space(text_[pos_])) ++pos_;
  }

  VertexId subtree(std::optional<VertexId> parent) {
    skip_space();
    const VertexId v = raw_.add(parent);
    if (peek() == '(') {
      ++pos_;
      while (true) {
        const VertexId child = subtree(v);
        skip_space();
        if (peek() != ':') fail("missing edge label");
        ++pos_;
        skip_space();
        raw_.vertices[child].edge_label = edge_label();
        skip_space();
        if (peek() != ',') break;
        ++pos_;
      }
      if (peek() != ')') fail("expected ',' or ')'");
      ++pos_;
      skip_space();
      raw_.vertices[v].name = name();
    } else {
      const std::size_t at = pos_;
      std::string label = name();
      if (label.empty()) {
        pos_ = at;
        fail("missing leaf label");
      }
      raw_.vertices[v].name = std::move(label);
    }
    return v;
  }

  EdgeLabel edge_label() {
    const std::size_t at = pos_;
    while (!at_end() && !is_space(peek()) && newick_special.find(peek()) == std::string_view::npos) {
      ++pos_;
    }
    const std::string_view token = text_.substr(at, pos_ - at);
    if (token == "0") return EdgeLabel::zero;
    if (token == "1") return EdgeLabel::one;
    pos_ = at;
    fail("edge label must be 0 or 1, got '" + std::string(token) + "'");
  }

  std::string name() {
    if (peek() == '\'') {
      ++pos_;
      std::string out;
      while (true) {
        if (at_end()) fail("unterminated quoted label");
        if (text_[pos_] == '\'') {
          if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '\'') {
            out += '\'';
            pos_ += 2;
            continue;
          }
          ++pos_;
          break;
        }
        out += text_[pos_++];
      }
      if (out.empty()) fail("empty quoted label");
      return out;
    }
    const std::size_t at = pos_;
    while (!at_end() && !is_space(peek()) && newick_special.find(peek()) == std::string_view::npos) {
      ++pos_;
    }
    if (peek() == '[') fail("comments are not supported");
    return std::string(text_.substr(at, pos_ - at));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  RawTree raw_;
};

std::string quote_name(const std::string& name) {
  const bool plain = std::none_of(name.begin(), name.end(), [](char c) {
    return is_space(c) || newick_special.find(c) != std::string_view::npos;
  });
  if (plain) return name;
  std::string out = "'";
  for (char c : name) out += c == '\'' ? std::string("''") : std::string(1, c);
  return out + "'";
}

void write_subtree(const EdgeLabeledTree& tree, VertexId v, std::string& out) {
  const Tree& t = tree.topology();
  if (!t.is_leaf(v)) {
    out += '(';
    bool first = true;
    for (VertexId c : t.children(v)) {
      if (!first) out += ',';
      first = false;
      write_subtree(tree, c, out);
      out += tree.is_one_edge(c) ? ":1" : ":0";
    }
    out += ')';
  }
  if (!t.name(v).empty()) out += quote_name(t.name(v));
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

EdgeLabeledTree parse_newick(std::string_view text) {
  return EdgeLabeledTree::build(NewickParser(text).parse());
}

std::string write_newick(const EdgeLabeledTree& tree) {
  std::string out;
  write_subtree(tree, tree.topology().root(), out);
  return out + ";";
}

std::string write_dot(const EdgeLabeledTree& tree) {
  const Tree& t = tree.topology();
  std::ostringstream out;
  out << "digraph tree {\n";
  std::vector<VertexId> stack{t.root()};
  std::vector<VertexId> preorder;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    preorder.push_back(v);
    const auto& cs = t.children(v);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) stack.push_back(*it);
  }
  for (VertexId v : preorder) {
    out << "  v" << v << " [label=\"" << dot_escape(t.name(v)) << "\""
        << (t.is_leaf(v) ? "" : ", shape=point") << "];\n";
  }
  for (VertexId v : preorder) {
    if (v == t.root()) continue;
    out << "  v" << t.parent(v) << " -> v" << v
        << (tree.is_one_edge(v) ? " [style=solid];\n" : " [style=dashed];\n");
  }
  out << "}\n";
  return out.str();
}

json catalog_to_json(const std::vector<oracle::TriangleClass>& catalog) {
  json classes = json::array();
  std::size_t allowed = 0;
  for (const auto& c : catalog) {
    allowed += c.allowed ? 1 : 0;
    json entry = relation_to_json(c.representative);
    entry["name"] = c.name;
    entry["allowed"] = c.allowed;
    entry["members"] = c.member_count;
    classes.push_back(std::move(entry));
  }
  return json{{"allowed", allowed},
              {"forbidden", catalog.size() - allowed},
              {"classes", std::move(classes)}};
}

}  // namespace fitch::io
