#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "loopbound/analyzer.hpp"
#include "loopbound/interp.hpp"
#include "loopbound/nfa.hpp"
#include "loopbound/parser.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitResources = 3;
constexpr int kExitTruncated = 4;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int load_program(const std::string& path, loopbound::Program& out) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitParse;
  }
  auto parsed = loopbound::parse_program(text);
  if (auto* err = std::get_if<loopbound::ParseError>(&parsed)) {
    std::cerr << path << ":" << err->line << ":" << err->column << ": "
              << err->message << "\n";
    return kExitParse;
  }
  out = std::move(std::get<loopbound::Program>(parsed));
  return 0;
}

int load_nfa(const std::string& path, loopbound::Nfa& out) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitParse;
  }
  auto parsed = loopbound::parse_nfa(text);
  if (auto* err = std::get_if<loopbound::ParseError>(&parsed)) {
    std::cerr << path << ":" << err->line << ": " << err->message << "\n";
    return kExitParse;
  }
  out = std::get<loopbound::Nfa>(parsed);
  return 0;
}

int parse_var_flag(const std::string& spec) {
  std::string digits = spec;
  if (!digits.empty() && (digits[0] == 'X' || digits[0] == 'x'))
    digits.erase(0, 1);
  try {
    return std::stoi(digits);
  } catch (...) {
    return 0;
  }
}

const char* verdict_label(const loopbound::Verdict& v) {
  if (v.mode == loopbound::Mode::Poly) return v.bounded ? "POLY" : "NOT-POLY";
  return v.bounded ? "LIN" : "NOT-LIN";
}

int cmd_analyze(const std::string& path, const std::string& mode_name,
                const std::string& var_spec, bool want_witness,
                bool full_l2, bool post_weakening, std::size_t max_table,
                const std::string& format) {
  loopbound::Program prog;
  if (int rc = load_program(path, prog)) return rc;

  loopbound::AnalyzerOptions opt;
  opt.mode =
      mode_name == "lin" ? loopbound::Mode::Lin : loopbound::Mode::Poly;
  opt.full_l2_fixpoint = full_l2;
  opt.post_weakening = post_weakening;
  opt.max_memo_entries = max_table;

  int only_var = 0;
  if (!var_spec.empty()) {
    only_var = parse_var_flag(var_spec);
    if (only_var < 1 || only_var > prog.var_count) {
      std::cerr << "error: --var " << var_spec << " is not a variable of "
                << path << " (vars 1.." << prog.var_count << ")\n";
      return kExitUsage;
    }
  }

  loopbound::Analysis analysis(prog, opt);
  std::vector<loopbound::Verdict> verdicts;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (only_var > 0)
      verdicts.push_back(analysis.verdict(only_var));
    else
      verdicts = analysis.verdicts();
  } catch (const loopbound::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResources;
  }
  auto ms = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();

  // a witness that fails replay is an engine bug, never a user error
  for (const auto& v : verdicts) {
    if (!want_witness || !v.witness) continue;
    std::string err;
    if (!loopbound::replay_witness(*v.witness, prog, opt.mode, &err)) {
      std::cerr << "internal error: witness replay failed: " << err << "\n";
      return kExitUsage;
    }
  }

  if (format == "json") {
    nlohmann::json out;
    out["mode"] = mode_name == "lin" ? "lin" : "poly";
    out["verdicts"] = nlohmann::json::array();
    for (const auto& v : verdicts) {
      nlohmann::json jv;
      jv["variable"] = v.variable;
      jv["bounded"] = v.bounded;
      jv["label"] = verdict_label(v);
      if (want_witness && v.witness) {
        jv["witness"] = loopbound::render_witness(*v.witness);
        jv["witness_replay"] = "ok";
      }
      out["verdicts"].push_back(std::move(jv));
    }
    out["stats"] = {{"contexts", analysis.contexts_explored()},
                    {"table_entries", analysis.memo_entries()},
                    {"time_ms", ms}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "mode: " << (mode_name == "lin" ? "lin" : "poly") << "\n";
  for (const auto& v : verdicts) {
    std::cout << "X" << v.variable << ": " << verdict_label(v) << "\n";
    if (want_witness && v.witness) {
      std::cout << loopbound::render_witness(*v.witness);
      std::cout << "witness_replay: ok\n";
    }
  }
  std::cout << "contexts: " << analysis.contexts_explored()
            << "\ntable_entries: " << analysis.memo_entries()
            << "\ntime_ms: " << ms << "\n";
  return 0;
}

int cmd_run(const std::string& path, const std::string& inputs_csv,
            std::size_t max_stores, std::uint64_t max_value, bool strict) {
  loopbound::Program prog;
  if (int rc = load_program(path, prog)) return rc;

  loopbound::Store s0;
  std::istringstream in(inputs_csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      s0.push_back(std::stoull(item));
    } catch (...) {
      std::cerr << "error: bad input value '" << item << "'\n";
      return kExitUsage;
    }
  }
  if (s0.size() != static_cast<std::size_t>(prog.var_count)) {
    std::cerr << "error: program has " << prog.var_count
              << " variables but " << s0.size() << " inputs were given\n";
    return kExitUsage;
  }

  loopbound::ExecLimits lim;
  lim.max_stores = max_stores;
  lim.max_value = max_value;
  loopbound::ExecResult r = loopbound::reachable_stores(*prog.root, s0, lim);

  std::cout << "stores: " << r.final_stores.size() << "\n";
  std::cout << "max:";
  for (std::size_t i = 0; i < r.max_per_var.size(); ++i)
    std::cout << " X" << (i + 1) << "=" << r.max_per_var[i];
  std::cout << "\nmax_steps: " << r.max_step_count << "\n";
  std::cout << "truncated: " << (r.truncated ? "yes" : "no") << "\n";
  if (r.truncated && strict) return kExitTruncated;
  return 0;
}

int cmd_nfa(const std::string& action, const std::string& path) {
  loopbound::Nfa a;
  if (int rc = load_nfa(path, a)) return rc;

  if (action == "emit") {
    loopbound::Program p = loopbound::nfa_to_program(a);
    std::cout << "vars " << p.var_count << "\n"
              << loopbound::render(*p.root) << "\n";
    return 0;
  }
  if (action == "check") {
    std::cout << (loopbound::is_universal(a) ? "UNIVERSAL" : "NOT-UNIVERSAL")
              << "\n";
    return 0;
  }
  // difftest: the analyzer's linear verdict for the result variable must
  // match the subset-construction oracle.
  bool oracle = loopbound::is_universal(a);
  loopbound::Program prog = loopbound::nfa_to_program(a);
  loopbound::AnalyzerOptions opt;
  opt.mode = loopbound::Mode::Lin;
  loopbound::Analysis analysis(prog, opt);
  loopbound::Verdict v;
  try {
    v = analysis.verdict(prog.var_count);  // the seed/result variable
  } catch (const loopbound::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResources;
  }
  bool agree = v.bounded == oracle;
  std::cout << (agree ? "AGREE" : "DISAGREE") << " (Z "
            << (v.bounded ? "LIN" : "NOT-LIN") << ", oracle "
            << (oracle ? "UNIVERSAL" : "NOT-UNIVERSAL") << ")\n";
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"growth-bound analyzer for the bounded-loop language"};
  app.require_subcommand(1);

  // analyze
  std::string a_file, a_mode = "poly", a_var, a_format = "text";
  bool a_witness = false, a_full_l2 = false, a_weaken = false;
  std::size_t a_max_table = std::size_t{1} << 20;
  auto* analyze = app.add_subcommand(
      "analyze", "decide per-variable growth bounds of a program");
  analyze->add_option("file", a_file, "program file (.lr)")->required();
  analyze->add_option("--mode", a_mode, "poly or lin")
      ->check(CLI::IsMember({"poly", "lin"}));
  analyze->add_option("--var", a_var, "restrict to one variable (e.g. X2)");
  analyze->add_flag("--witness", a_witness,
                    "print a derivation tree for unbounded variables");
  analyze->add_flag("--full-l2-fixpoint", a_full_l2,
                    "iterate the loop-correction rule to a fixpoint");
  analyze->add_flag("--post-weakening", a_weaken,
                    "experimental post-context weakening rule");
  analyze->add_option("--max-table", a_max_table,
                      "cap on (node, context) table entries");
  analyze->add_option("--format", a_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // run
  std::string r_file, r_inputs;
  std::size_t r_max_stores = 1'000'000;
  std::uint64_t r_max_value = 1'000'000'000'000ull;
  bool r_strict = false;
  auto* run = app.add_subcommand(
      "run", "enumerate the reachable stores of a program");
  run->add_option("file", r_file, "program file (.lr)")->required();
  run->add_option("--inputs", r_inputs, "comma-separated initial values")
      ->required();
  run->add_option("--max-stores", r_max_stores, "store-set size cap");
  run->add_option("--max-value", r_max_value, "value cap");
  run->add_flag("--strict", r_strict, "fail when the result is truncated");

  // nfa
  std::string n_action, n_file;
  auto* nfa = app.add_subcommand(
      "nfa", "universality reduction: emit, check or difftest");
  nfa->add_option("action", n_action, "emit | check | difftest")
      ->required()
      ->check(CLI::IsMember({"emit", "check", "difftest"}));
  nfa->add_option("file", n_file, "automaton file (.nfa)")->required();

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed())
    return cmd_analyze(a_file, a_mode, a_var, a_witness, a_full_l2, a_weaken,
                       a_max_table, a_format);
  if (run->parsed())
    return cmd_run(r_file, r_inputs, r_max_stores, r_max_value, r_strict);
  if (nfa->parsed()) return cmd_nfa(n_action, n_file);
  return kExitUsage;
}
