#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "compnet/io.hpp"

using namespace compnet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

int exit_code_for(const Error& e) {
  const std::string& code = e.code();
  if (code == errc::parse_error || code == errc::type_error || code == errc::io_error ||
      code == errc::invalid_function || code == errc::foot_mismatch)
    return kExitBadInput;
  return kExitCheckFailed;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty())
    std::cout << text;
  else
    write_text_file(output, text);
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> point;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    point.push_back(rational_parse(text.substr(pos, comma - pos)));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return point;
}

int cmd_compose(const std::string& pipeline_path, const std::string& output, bool normalize) {
  Pipeline p = load_pipeline_file(pipeline_path);
  Network result = eval_pipeline(p, normalize);
  emit(canonical_text(network_to_json(result)), output);
  return kExitOk;
}

int cmd_tensor(const std::string& a_path, const std::string& b_path, const std::string& output) {
  Network result = network_tensor(load_network_file(a_path), load_network_file(b_path));
  emit(canonical_text(network_to_json(result)), output);
  return kExitOk;
}

int cmd_check(const std::string& src_path, const std::string& tgt_path,
              const std::string& map_path) {
  Network src = load_network_file(src_path);
  Network tgt = load_network_file(tgt_path);
  if (network_backend(src) != network_backend(tgt))
    fail(errc::type_error, "source and target use different backends");
  nlohmann::json mj = read_json_file(map_path);
  if (!mj.is_object() || !mj.contains("map") || !mj["map"].is_array())
    fail(errc::parse_error, "map document needs a \"map\" table");
  std::vector<int> table;
  for (const auto& v : mj["map"]) table.push_back(v.get<int>());

  auto run = [&](const auto& s, const auto& t) -> int {
    FinFunction h(s.cospan.apex, t.cospan.apex, table);
    DecoratedMap dm{h};
    if (auto why = decorated_map_diagnose(dm, s, t)) {
      std::cerr << "check failed: " << *why << "\n";
      return kExitCheckFailed;
    }
    std::cout << "valid 2-morphism\n";
    return kExitOk;
  };
  if (std::holds_alternative<Circuit>(src))
    return run(std::get<Circuit>(src), std::get<Circuit>(tgt));
  return run(std::get<OpenSystem>(src), std::get<OpenSystem>(tgt));
}

int cmd_laws(const CaseGenerator& gen, const std::string& backend, bool serial,
             const std::string& output) {
  // test-only hook: lets the suite prove it is not vacuous
  if (const char* broken = std::getenv("COMPNET_BREAK_PUSHOUT_FOR_TESTING");
      broken && broken[0] == '1')
    set_pushout_normalization_for_testing(false);
  RunMode mode = serial ? RunMode::Serial : RunMode::Parallel;
  std::vector<LawReport> reports;
  if (backend == "all") {
    reports = run_all_laws(gen, mode);
  } else if (backend == "circuit") {
    reports.push_back(check_decoration_functor_circuit(gen, mode));
  } else if (backend == "vectfield") {
    reports.push_back(check_decoration_functor_vectfield(gen, mode));
  } else {
    fail(errc::parse_error, "unknown backend \"" + backend + "\"");
  }
  bool passed = true;
  for (const LawReport& r : reports) {
    passed = passed && r.passed();
    std::printf("%s %-24s %6d cases, %zu failures (%.1f ms)\n", r.passed() ? "PASS" : "FAIL",
                r.law.c_str(), r.cases_run, r.failures.size(), r.elapsed_ms);
    for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i)
      std::printf("     case %d: %s\n       %s\n", r.failures[i].case_index,
                  r.failures[i].message.c_str(), r.failures[i].repro.c_str());
  }
  if (!output.empty()) write_text_file(output, canonical_text(law_reports_json(reports, gen)));
  return passed ? kExitOk : kExitCheckFailed;
}

int cmd_export(const std::string& network_path, const std::string& format,
               const std::string& output) {
  Network n = load_network_file(network_path);
  if (format == "dot") {
    if (!std::holds_alternative<Circuit>(n))
      fail(errc::type_error, "dot export is only defined for circuits");
    emit(dot_export(std::get<Circuit>(n)), output);
    return kExitOk;
  }
  if (format == "csv") {
    std::string text;
    if (std::holds_alternative<Circuit>(n)) {
      text = "src,tgt,label\n";
      for (const LEdge& e : std::get<Circuit>(n).decoration.edges)
        text += std::to_string(e.src) + "," + std::to_string(e.tgt) + "," + e.label.str() + "\n";
    } else {
      text = "component,polynomial\n";
      const auto& vf = std::get<OpenSystem>(n).decoration;
      for (std::size_t k = 0; k < vf.components.size(); ++k)
        text += std::to_string(k) + ",\"" + vf.components[k].str() + "\"\n";
    }
    emit(text, output);
    return kExitOk;
  }
  fail(errc::parse_error, "unknown export format \"" + format + "\"");
}

int cmd_simulate(const std::string& network_path, const std::string& start_text,
                 const std::string& step_text, int steps, const std::string& format,
                 const std::string& output) {
  Network n = load_network_file(network_path);
  if (!std::holds_alternative<OpenSystem>(n))
    fail(errc::type_error, "simulate needs a vectfield network");
  const auto& system = std::get<OpenSystem>(n);
  auto trajectory = euler_integrate(system.decoration, parse_point(start_text),
                                    rational_parse(step_text), steps);
  std::string text = "step";
  for (int k = 0; k < system.decoration.space.size; ++k) text += ",x" + std::to_string(k);
  text += "\n";
  for (std::size_t row = 0; row < trajectory.size(); ++row) {
    text += std::to_string(row);
    for (const Rational& v : trajectory[row]) {
      if (format == "float")
        text += "," + std::to_string(static_cast<double>(v));
      else
        text += "," + rational_str(v);
    }
    text += "\n";
  }
  emit(text, output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compositional network engine"};
  app.require_subcommand(1);

  std::string output, pipeline_path, a_path, b_path, src_path, tgt_path, map_path;
  std::string network_path, format = "dot", start_text, step_text = "1";
  std::string backend = "all", report_path;
  bool normalize = false, serial = false;
  int steps = 10;
  CaseGenerator gen;

  auto* compose = app.add_subcommand("compose", "evaluate a pipeline of networks");
  compose->add_option("pipeline", pipeline_path, "pipeline JSON file")->required();
  compose->add_option("--output", output, "output file (default: stdout)");
  compose->add_flag("--normalize", normalize,
                    "renumber the result over the coproduct of all leaf apexes");

  auto* tensor_cmd = app.add_subcommand("tensor", "tensor two networks");
  tensor_cmd->add_option("a", a_path, "first network")->required();
  tensor_cmd->add_option("b", b_path, "second network")->required();
  tensor_cmd->add_option("--output", output, "output file (default: stdout)");

  auto* check = app.add_subcommand("check", "verify a claimed 2-morphism");
  check->add_option("source", src_path)->required();
  check->add_option("target", tgt_path)->required();
  check->add_option("map", map_path, "JSON file with the apex map table")->required();

  auto* laws = app.add_subcommand("laws", "run the law suite");
  laws->add_option("--seed", gen.seed, "case generator seed");
  laws->add_option("--cases", gen.case_count, "cases per structural suite");
  laws->add_option("--max-size", gen.max_set_size, "maximum set size");
  laws->add_option("--backend", backend, "all | circuit | vectfield");
  laws->add_option("--output", report_path, "write a JSON report");
  laws->add_flag("--serial", serial, "use the serial reference runner");

  auto* export_cmd = app.add_subcommand("export", "export a network");
  export_cmd->add_option("network", network_path)->required();
  export_cmd->add_option("--format", format, "dot | csv");
  export_cmd->add_option("--output", output, "output file (default: stdout)");

  auto* simulate = app.add_subcommand("simulate", "Euler-integrate a vectfield network");
  simulate->add_option("network", network_path)->required();
  simulate->add_option("--start", start_text, "comma-separated rationals")->required();
  simulate->add_option("--step", step_text, "step size (rational)");
  simulate->add_option("--steps", steps, "number of steps");
  simulate->add_option("--format", format, "rational | float")->default_val("rational");
  simulate->add_option("--output", output, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compose) return cmd_compose(pipeline_path, output, normalize);
    if (*tensor_cmd) return cmd_tensor(a_path, b_path, output);
    if (*check) return cmd_check(src_path, tgt_path, map_path);
    if (*laws) return cmd_laws(gen, backend, serial, report_path);
    if (*export_cmd) return cmd_export(network_path, format, output);
    if (*simulate)
      return cmd_simulate(network_path, start_text, step_text, steps, format, output);
  } catch (const Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
