// Command-line front end: model checking, updates, reduction, and the
// satisfiability/validity decision procedure.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdk/checker.hpp"
#include "cdk/closure.hpp"
#include "cdk/decision.hpp"
#include "cdk/errors.hpp"
#include "cdk/parser.hpp"
#include "cdk/printer.hpp"
#include "cdk/reducer.hpp"
#include "cdk/update.hpp"

namespace {

using namespace cdk;

std::string file_stem(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

EventRegistry load_registry(const std::vector<std::string>& paths, bool strict) {
  EventRegistry reg;
  for (const auto& p : paths) {
    std::string warnings;
    reg[file_stem(p)] = load_event_model_file(p, strict, &warnings);
    if (!warnings.empty()) std::cerr << warnings;
  }
  return reg;
}

Group parse_agent_list(const std::string& csv) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) names.push_back(cur);
  if (names.empty()) throw SemanticError("empty agent list");
  return Group::parse_names(names);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw SemanticError("cannot write to " + out_path);
  out << text;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
      return 2;
    case ErrorKind::Semantic:
      return 3;
    case ErrorKind::Fragment:
      return 4;
    case ErrorKind::Resource:
      return 5;
    case ErrorKind::Internal:
      return 1;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checker and decision procedure for epistemic logics with comparative "
               "knowledge, common distributed knowledge, and reading actions"};
  app.require_subcommand(1);

  std::string model_path, state_id, formula_text, action_text, event_spec, out_path;
  std::string agents_csv, witness_path;
  std::vector<std::string> event_paths;
  bool strict = false, serial = false;
  std::size_t max_closure = 4096, max_atoms = 200000;

  auto* check_cmd = app.add_subcommand("check", "Evaluate a formula at a state of a model");
  check_cmd->add_option("--model", model_path, "Model document (JSON)")->required();
  check_cmd->add_option("--state", state_id, "State id")->required();
  check_cmd->add_option("--formula", formula_text, "Formula")->required();
  check_cmd->add_option("--events", event_paths, "Event model files (id = file stem)");
  check_cmd->add_flag("--strict", strict, "Reject read groups missing their reader");

  auto* update_cmd = app.add_subcommand("update", "Apply an action to a model");
  update_cmd->add_option("--model", model_path, "Model document (JSON)")->required();
  update_cmd->add_option("--action", action_text, "Action, e.g. \"!pub{a}\"");
  update_cmd->add_option("--event", event_spec, "PATH:EVENT product update");
  update_cmd->add_option("--out", out_path, "Output file (default stdout)");
  update_cmd->add_flag("--strict", strict, "Reject read groups missing their reader");

  auto* reduce_cmd = app.add_subcommand("reduce", "Compile dynamic modalities away");
  reduce_cmd->add_option("--formula", formula_text, "Formula")->required();
  reduce_cmd->add_option("--events", event_paths, "Event model files (id = file stem)");
  reduce_cmd->add_option("--agents", agents_csv, "Declared agents (comma separated)");
  reduce_cmd->add_flag("--strict", strict, "Reject read groups missing their reader");

  auto* sat_cmd = app.add_subcommand("sat", "Decide satisfiability");
  sat_cmd->add_option("--formula", formula_text, "Formula")->required();
  sat_cmd->add_option("--agents", agents_csv, "Agent universe (default: inferred)");
  sat_cmd->add_option("--witness", witness_path, "Write a verified witness pseudo-model here");
  sat_cmd->add_option("--events", event_paths, "Event model files (id = file stem)");
  sat_cmd->add_option("--max-closure", max_closure, "Closure size cap");
  sat_cmd->add_option("--max-atoms", max_atoms, "Atom enumeration cap");
  sat_cmd->add_flag("--serial", serial, "Disable the parallel elimination kernel");

  auto* valid_cmd = app.add_subcommand("valid", "Decide validity");
  valid_cmd->add_option("--formula", formula_text, "Formula")->required();
  valid_cmd->add_option("--agents", agents_csv, "Agent universe (default: inferred)");
  valid_cmd->add_option("--events", event_paths, "Event model files (id = file stem)");
  valid_cmd->add_option("--max-closure", max_closure, "Closure size cap");
  valid_cmd->add_option("--max-atoms", max_atoms, "Atom enumeration cap");
  valid_cmd->add_flag("--serial", serial, "Disable the parallel elimination kernel");

  auto* closure_cmd = app.add_subcommand("closure", "List the closure of a static formula");
  closure_cmd->add_option("--formula", formula_text, "Formula")->required();
  closure_cmd->add_option("--agents", agents_csv, "Agent universe (comma separated)")->required();
  closure_cmd->add_option("--max-closure", max_closure, "Closure size cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check_cmd) {
      ModelPtr m = load_model_file(model_path);
      EventRegistry reg = load_registry(event_paths, strict);
      ParseContext ctx{m->universe(), &reg};
      Formula f = parse_formula(formula_text, ctx);
      Checker checker(reg);
      std::cout << (checker.check(m, state_id, f) ? "true" : "false") << "\n";
      return 0;
    }

    if (*update_cmd) {
      ModelPtr m = load_model_file(model_path);
      if (action_text.empty() == event_spec.empty())
        throw SemanticError("update needs exactly one of --action or --event");
      ModelPtr updated;
      if (!action_text.empty()) {
        ParseContext ctx{m->universe(), nullptr};
        ParsedAction a = parse_action(action_text, ctx);
        if (!a.reading) throw SemanticError("--action expects a reading action \"!...\"");
        updated = semi_public_update(*m, *a.reading);
      } else {
        std::size_t colon = event_spec.find_last_of(':');
        if (colon == std::string::npos)
          throw SemanticError("--event expects PATH:EVENT");
        std::string warnings;
        EventModelPtr em =
            load_event_model_file(event_spec.substr(0, colon), strict, &warnings);
        if (!warnings.empty()) std::cerr << warnings;
        std::string event_id = event_spec.substr(colon + 1);
        em->event_index(event_id);  // validate
        updated = product_update(*m, *em);
      }
      write_output(model_to_json(*updated), out_path);
      return 0;
    }

    if (*reduce_cmd) {
      EventRegistry reg = load_registry(event_paths, strict);
      ParseContext ctx{std::nullopt, &reg};
      if (!agents_csv.empty()) ctx.universe = parse_agent_list(agents_csv);
      Formula f = parse_formula(formula_text, ctx);
      std::cout << render_formula(reduce(f, reg)) << "\n";
      return 0;
    }

    if (*sat_cmd || *valid_cmd) {
      EventRegistry reg = load_registry(event_paths, strict);
      ParseContext ctx{std::nullopt, &reg};
      Group agents;
      if (!agents_csv.empty()) {
        agents = parse_agent_list(agents_csv);
        ctx.universe = agents;
      }
      Formula f = parse_formula(formula_text, ctx);
      DecisionLimits limits{max_closure, max_atoms, !serial};
      if (*valid_cmd) {
        std::cout << (valid(f, agents, reg, limits) ? "valid" : "invalid") << "\n";
        return 0;
      }
      SatResult result = sat(f, agents, reg, limits);
      std::cout << (result.satisfiable ? "sat" : "unsat") << "\n";
      if (result.satisfiable && !witness_path.empty())
        write_output(pseudo_to_json(*result.witness, result.state), witness_path);
      return 0;
    }

    if (*closure_cmd) {
      ParseContext ctx{parse_agent_list(agents_csv), nullptr};
      Formula f = parse_formula(formula_text, ctx);
      FLClosure closure(f, *ctx.universe, max_closure);
      std::cout << closure.members().size() << "\n";
      for (const auto& member : closure.members()) std::cout << render_formula(member) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
