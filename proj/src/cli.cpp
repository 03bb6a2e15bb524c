#include "fitch/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "fitch/errors.hpp"
#include "fitch/io.hpp"
#include "fitch/oracle.hpp"

namespace fitch::cli {

using nlohmann::json;

json verdict_to_json(const Verdict& verdict, const LabelSet& labels) {
  json out{{"status", verdict.is_fitch() ? "FITCH" : "NOT-FITCH"}};
  if (verdict.is_fitch()) return out;

  json witnesses = json::array();
  if (verdict.triangle) {
    const Triple& t = *verdict.triangle;
    witnesses.push_back({{"kind", "triangle"}, {"triple", {labels[t.a], labels[t.b], labels[t.c]}}});
  }
  if (verdict.neighborhood) {
    if (const auto* o = std::get_if<OverlapWitness>(&*verdict.neighborhood)) {
      witnesses.push_back(
          {{"kind", "hlc"},
           {"sets", json::array({labels.names_of(o->first), labels.names_of(o->second)})}});
    } else {
      const auto& ic = std::get<InequalityWitness>(*verdict.neighborhood);
      witnesses.push_back({{"kind", "ic"},
                           {"neighborhood", labels.names_of(ic.neighborhood)},
                           {"member", labels[ic.member]}});
    }
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw DomainError("cannot write '" + output + "'");
  file << text;
}

// JSON when the first non-blank character opens an object, else edge list.
Relation parse_relation_auto(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return io::parse_relation_json(text);
  return io::parse_edge_list(text);
}

Relation parse_relation_as(const std::string& format, std::string_view text) {
  if (format == "json") return io::parse_relation_json(text);
  if (format == "edgelist") return io::parse_edge_list(text);
  throw DomainError("'" + format + "' is not a relation format");
}

std::string write_relation_as(const std::string& format, const Relation& relation) {
  if (format == "json") return io::write_relation_json(relation);
  if (format == "edgelist") return io::write_edge_list(relation);
  throw DomainError("'" + format + "' is not a relation format");
}

void require_labels(const Relation& relation, std::size_t minimum) {
  if (relation.labels().size() < minimum) {
    throw DomainError("relation needs at least " + std::to_string(minimum) + " label(s)");
  }
}

std::string verdict_line(const Verdict& verdict, const LabelSet& labels) {
  return verdict_to_json(verdict, labels).dump() + "\n";
}

int cmd_check(const std::string& input, const std::string& output, Io io) {
  const Relation relation = parse_relation_auto(read_input(input, io.in));
  require_labels(relation, 1);
  const Verdict verdict = explain(relation);
  emit(verdict_line(verdict, relation.labels()), output, io.out);
  return verdict.is_fitch() ? exit_ok : exit_negative;
}

int cmd_explain(const std::string& input, const std::string& format, const std::string& output,
                Io io) {
  const Relation relation = parse_relation_auto(read_input(input, io.in));
  require_labels(relation, 2);
  const Verdict verdict = explain(relation);
  if (!verdict.is_fitch()) {
    emit(verdict_line(verdict, relation.labels()), output, io.out);
    return exit_negative;
  }
  const std::string text =
      format == "dot" ? io::write_dot(*verdict.tree) : io::write_newick(*verdict.tree) + "\n";
  emit(text, output, io.out);
  return exit_ok;
}

int cmd_extract(const std::string& input, const std::string& format, const std::string& output,
                Io io) {
  const EdgeLabeledTree tree = io::parse_newick(read_input(input, io.in));
  emit(write_relation_as(format, extract_relation(tree)), output, io.out);
  return exit_ok;
}

int cmd_catalog(const std::string& output, Io io) {
  emit(io::catalog_to_json(oracle::derive_triangle_catalog()).dump(2) + "\n", output, io.out);
  return exit_ok;
}

int cmd_convert(const std::string& input, const std::string& from, const std::string& to,
                const std::string& output, Io io) {
  auto is_relation = [](const std::string& f) { return f == "json" || f == "edgelist"; };
  if (from == "dot") throw DomainError("dot is an output-only format");
  if (is_relation(from) && is_relation(to)) {
    const Relation relation = parse_relation_as(from, read_input(input, io.in));
    emit(write_relation_as(to, relation), output, io.out);
    return exit_ok;
  }
  if (from == "newick" && (to == "newick" || to == "dot")) {
    const EdgeLabeledTree tree = io::parse_newick(read_input(input, io.in));
    emit(to == "dot" ? io::write_dot(tree) : io::write_newick(tree) + "\n", output, io.out);
    return exit_ok;
  }
  throw DomainError("cannot convert from " + from + " to " + to);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Recognize and explain Fitch relations", "fitch"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string format;
  std::string from;
  std::string to;

  auto* check = app.add_subcommand("check", "Decide whether a relation is Fitch");
  check->add_option("input", input, "Relation file (JSON or edge list), - for stdin")->required();
  check->add_option("--output", output, "Write the report to PATH");

  auto* explain_cmd = app.add_subcommand("explain", "Print the least-resolved tree");
  explain_cmd->add_option("input", input, "Relation file (JSON or edge list), - for stdin")
      ->required();
  explain_cmd->add_option("--format", format, "Tree output format")
      ->check(CLI::IsMember({"newick", "dot"}))
      ->default_val("newick");
  explain_cmd->add_option("--output", output, "Write the tree to PATH");

  auto* extract = app.add_subcommand("extract", "Relation induced by an edge-labeled tree");
  extract->add_option("input", input, "Newick file, - for stdin")->required();
  extract->add_option("--format", format, "Relation output format")
      ->check(CLI::IsMember({"json", "edgelist"}))
      ->default_val("json");
  extract->add_option("--output", output, "Write the relation to PATH");

  auto* catalog = app.add_subcommand("catalog", "Allowed and forbidden three-label relations");
  catalog->add_option("--output", output, "Write the catalog to PATH");

  auto* convert = app.add_subcommand("convert", "Convert between formats");
  convert->add_option("input", input, "Input file, - for stdin")->required();
  const auto formats = CLI::IsMember({"json", "edgelist", "newick", "dot"});
  convert->add_option("--from", from, "Input format")->required()->check(formats);
  convert->add_option("--to", to, "Output format")->required()->check(formats);
  convert->add_option("--output", output, "Write the result to PATH");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  const Io io{in, out, err};
  try {
    if (*check) return cmd_check(input, output, io);
    if (*explain_cmd) return cmd_explain(input, format, output, io);
    if (*extract) return cmd_extract(input, format, output, io);
    if (*catalog) return cmd_catalog(output, io);
    if (*convert) return cmd_convert(input, from, to, output, io);
  } catch (const ParseError& e) {
    err << "fitch: parse error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const StructuralError& e) {
    err << "fitch: invalid tree: " << e.what() << "\n";
    return exit_input_error;
  } catch (const InvariantViolation& e) {
    err << "fitch: internal error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const Error& e) {
    err << "fitch: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_input_error;
}

}  // namespace fitch::cli
