// Copyright 2026 The crflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crflow/cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <utility>

#include "CLI11.hpp"
#include "crflow/analyze.h"
#include "crflow/compose.h"
#include "crflow/cr.h"
#include "crflow/dot.h"
#include "crflow/errors.h"
#include "crflow/json_io.h"
#include "crflow/metapolicy.h"
#include "crflow/translate.h"

namespace crflow::cli {
namespace {

using QueryPair = std::pair<std::string, std::string>;

// A query that cannot be answered; maps to kBadQuery.
class QueryError : public Error {
 public:
  using Error::Error;
};

class Output {
 public:
  Output(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  std::string path;  // empty: write to `out`

  void write(const std::string& text) const { write_to(path, text); }

  void write_to(const std::string& target, const std::string& text) const {
    if (target.empty() || target == "-") {
      out_ << text;
      out_.flush();
      return;
    }
    std::ofstream file(target, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text)) {
      throw std::ios_base::failure("cannot write '" + target + "'");
    }
  }

  std::ostream& err() const { return err_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
};

// Report envelope shared by the JSON-emitting commands.
class Report {
 public:
  Report(std::string command, std::vector<std::string> inputs)
      : command_(std::move(command)), inputs_(std::move(inputs)) {}

  void warn(const Output& output, std::string message) {
    output.err() << "warning: " << message << "\n";
    diagnostics_.push_back(std::move(message));
  }

  std::string render(Json outcome) const {
    return dump(Json{{"command", command_},
                     {"inputs", inputs_},
                     {"outcome", std::move(outcome)},
                     {"diagnostics", diagnostics_}});
  }

 private:
  std::string command_;
  std::vector<std::string> inputs_;
  std::vector<std::string> diagnostics_;
};

CommonRepresentation load_cr(const std::string& path) {
  try {
    return parse_cr(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

bool shares_interfaces(const CommonRepresentation& a,
                       const CommonRepresentation& b) {
  return std::ranges::any_of(a.interfaces(), [&](const InterfaceId& id) {
    return b.has_interface(id);
  });
}

InterfaceId query_interface(const std::string& text) {
  try {
    return InterfaceId::parse(text);
  } catch (const ParseError& e) {
    throw QueryError(e.what());
  }
}

int cmd_translate(const Output& output, const std::string& policy_path,
                  const std::string& semantics_text) {
  auto semantics = parse_rbac_semantics(semantics_text);
  SourcePolicy policy;
  try {
    policy = parse_policy(read_file(policy_path));
  } catch (const ParseError& e) {
    throw ParseError(policy_path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(policy_path + ": " + e.what());
  }
  output.write(dump_cr(translate(policy, semantics)));
  return kOk;
}

int cmd_compose(const Output& output, const std::string& op,
                const std::vector<std::string>& files,
                const std::string& rule_path, const std::string& cr_out) {
  if (files.size() < 2) {
    output.err() << "error: compose needs at least two CR files\n";
    return kUsage;
  }
  if (op == "rule" && rule_path.empty()) {
    output.err() << "error: compose rule requires --rule FILE\n";
    return kUsage;
  }
  if (op != "rule" && !rule_path.empty()) {
    output.err() << "error: --rule is only valid with the rule operation\n";
    return kUsage;
  }

  std::vector<CommonRepresentation> crs;
  for (const auto& f : files) crs.push_back(load_cr(f));

  if (op == "merge") {
    output.write(dump_cr(merge_all(crs)));
    return kOk;
  }
  if (op == "append") {
    output.write(dump_cr(append_all(crs)));
    return kOk;
  }
  if (op == "append-strict") {
    output.write(dump_cr(append_strict_all(crs)));
    return kOk;
  }

  CompositionRule rule = [&] {
    try {
      return parse_rule(read_file(rule_path));
    } catch (const ParseError& e) {
      throw ParseError(rule_path + ": " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError(rule_path + ": " + e.what());
    }
  }();

  std::vector<std::string> inputs = files;
  inputs.push_back(rule_path);
  Report report("compose", std::move(inputs));

  // Left fold: the accumulated result is the first operand of each step.
  Json decisions = Json::array();
  std::optional<CommonRepresentation> acc = crs.front();
  for (std::size_t i = 1; i < crs.size(); ++i) {
    if (!shares_interfaces(*acc, crs[i])) {
      report.warn(output, "step " + std::to_string(i) +
                              ": operands share no interfaces; conflicts are "
                              "vacuously empty");
    }
    CompositionDecision decision = apply_rule(rule, *acc, crs[i]);
    decisions.push_back(to_json(decision));
    acc = std::move(decision.result);
    if (!acc) break;
  }

  Json outcome{{"op", "rule"},
               {"rule", to_json(rule)},
               {"decisions", std::move(decisions)},
               {"result", acc ? to_json(*acc) : Json(nullptr)}};
  output.write(report.render(std::move(outcome)));
  if (!acc) {
    output.err() << "composition rejected by rule\n";
    return kRejected;
  }
  if (!cr_out.empty()) output.write_to(cr_out, dump_cr(*acc));
  return kOk;
}

int cmd_analyze(const Output& output, const std::string& a_path,
                const std::string& b_path) {
  auto a = load_cr(a_path);
  auto b = load_cr(b_path);
  Report report("analyze", {a_path, b_path});
  if (!shares_interfaces(a, b)) {
    report.warn(output, "inputs share no interfaces; no conflict is possible");
  }
  auto found = conflicts(a, b);
  Json outcome{{"conflicting", !found.empty()},
               {"conflicts", to_json(found)},
               {"common_flows", to_json(common_flows(a, b))},
               {"diffs", to_json(diffs(a, b))}};
  output.write(report.render(std::move(outcome)));
  return kOk;
}

int cmd_check(const Output& output, const std::string& cr_path,
              const std::vector<QueryPair>& grants,
              const std::vector<QueryPair>& reach, bool lively) {
  auto cr = load_cr(cr_path);
  Report report("check", {cr_path});
  Json results = Json::array();
  for (const auto& [from, to] : grants) {
    auto g = grant(query_interface(from), query_interface(to), cr);
    results.push_back(Json{{"query", "grant"},
                           {"from", from},
                           {"to", to},
                           {"result", std::string(grant_result_name(g))}});
  }
  for (const auto& [from, to] : reach) {
    bool r;
    try {
      r = reachable(cr, query_interface(from), query_interface(to));
    } catch (const UnknownNameError& e) {
      throw QueryError(std::string("--reachable: ") + e.what());
    }
    results.push_back(Json{
        {"query", "reachable"}, {"from", from}, {"to", to}, {"result", r}});
  }
  if (lively) {
    auto components = availability_graph(cr).component_count();
    results.push_back(Json{{"query", "lively"},
                           {"result", components == 1},
                           {"components", components}});
  }
  if (results.empty()) report.warn(output, "no queries given");
  output.write(report.render(Json{{"results", std::move(results)}}));
  return kOk;
}

int cmd_export_dot(const Output& output, const std::string& cr_path) {
  output.write(to_dot(load_cr(cr_path)));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Translate, compose and analyze access-control policies as "
      "information-flow graphs.",
      "crflow"};
  app.require_subcommand(1);
  Output output(out, err);

  std::string policy_path;
  std::string semantics = "literal";
  auto* translate_cmd =
      app.add_subcommand("translate", "Translate a policy file into a CR");
  translate_cmd->add_option("policy", policy_path, "Policy JSON file")
      ->required();
  translate_cmd
      ->add_option("--rbac-semantics", semantics,
                   "RBAC flow derivation: literal or cross-object")
      ->check(CLI::IsMember({"literal", "cross-object"}));
  translate_cmd->add_option("-o,--output", output.path, "Output file");

  std::string op;
  std::vector<std::string> cr_files;
  std::string rule_path;
  std::string cr_out;
  auto* compose_cmd = app.add_subcommand(
      "compose", "Fold CRs left-to-right with one composition operation");
  compose_cmd->add_option("op", op, "merge, append, append-strict or rule")
      ->required()
      ->check(CLI::IsMember({"merge", "append", "append-strict", "rule"}));
  compose_cmd->add_option("crs", cr_files, "CR files, in order")->required();
  compose_cmd->add_option("--rule", rule_path, "Rule file (rule op only)");
  compose_cmd->add_option("--cr-out", cr_out,
                          "Also write the resulting CR here (rule op only)");
  compose_cmd->add_option("-o,--output", output.path, "Output file");

  std::string a_path;
  std::string b_path;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Report conflicts and differences");
  analyze_cmd->add_option("a", a_path, "First CR")->required();
  analyze_cmd->add_option("b", b_path, "Second CR")->required();
  analyze_cmd->add_option("-o,--output", output.path, "Output file");

  std::string cr_path;
  std::vector<QueryPair> grants;
  std::vector<QueryPair> reach;
  bool lively = false;
  auto* check_cmd = app.add_subcommand(
      "check", "Answer grant, reachability and liveliness queries");
  check_cmd->add_option("cr", cr_path, "CR file")->required();
  check_cmd->add_option("--grant", grants, "FROM TO");
  check_cmd->add_option("--reachable", reach, "FROM TO");
  check_cmd->add_flag("--lively", lively, "Report whether the CR is lively");
  check_cmd->add_option("-o,--output", output.path, "Output file");

  auto* dot_cmd = app.add_subcommand("export-dot", "Emit a Graphviz digraph");
  dot_cmd->add_option("cr", cr_path, "CR file")->required();
  dot_cmd->add_option("-o,--output", output.path, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*translate_cmd) return cmd_translate(output, policy_path, semantics);
    if (*compose_cmd) {
      return cmd_compose(output, op, cr_files, rule_path, cr_out);
    }
    if (*analyze_cmd) return cmd_analyze(output, a_path, b_path);
    if (*check_cmd) return cmd_check(output, cr_path, grants, reach, lively);
    if (*dot_cmd) return cmd_export_dot(output, cr_path);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const QueryError& e) {
    err << "query error: " << e.what() << "\n";
    return kBadQuery;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace crflow::cli
