#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pentagon/clifford.hpp"
#include "pentagon/congruence.hpp"
#include "pentagon/constructions.hpp"
#include "pentagon/enumeration.hpp"
#include "pentagon/io.hpp"
#include "pentagon/solution.hpp"

namespace fs = std::filesystem;
using namespace pentagon;

namespace {

// exit codes: 0 = success / property holds, 1 = invalid input or usage,
// 2 = inputs parsed and validated but a mathematical check came out false
struct cli_failure {
  int code;
};

struct options {
  bool json = false;
  bool quiet = false;
  int threads = 1;
};

int math_exit_code(const error& e) {
  // shape and parse problems are input errors even when they surface
  // during a later phase
  return (e.kind() == "ParseError" || e.kind() == "OutOfRangeEntry") ? 1 : 2;
}

template <typename F>
auto load_phase(F&& f) {
  try {
    return f();
  } catch (const error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    throw cli_failure{1};
  }
}

void print(const options& opt, const std::string& text) {
  if (!opt.quiet) std::cout << text << "\n";
}

void print_json(const options& opt, const io::json& j) {
  if (!opt.quiet) std::cout << j.dump(2) << "\n";
}

std::string join_names(const finite_semigroup& S, const std::vector<int>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += " ";
    out += S.name_of(xs[i]);
  }
  return out;
}

int cmd_validate(const options& opt, const std::string& file, bool clifford) {
  auto S = load_phase([&] { return io::load_semigroup(file); });
  io::json report{{"valid", true},
                  {"name", S.display_name()},
                  {"order", S.order()},
                  {"idempotents", idempotents(S).elements()}};
  auto cr = is_clifford(S);
  report["clifford"] = cr.value;
  if (clifford && !cr) {
    if (opt.json)
      print_json(opt, io::json{{"valid", true}, {"clifford", false},
                               {"reason", cr.reason}, {"witness", cr.witness}});
    else
      print(opt, "not a Clifford semigroup: " + cr.reason);
    return 2;
  }
  if (opt.json) {
    print_json(opt, report);
  } else {
    print(opt, "valid: " + S.display_name() + " (order " +
                   std::to_string(S.order()) + ", " +
                   std::to_string(idempotents(S).count()) + " idempotents)");
    print(opt, std::string("clifford: ") + (cr.value ? "yes" : "no"));
  }
  return 0;
}

int cmd_analyze(const options& opt, const std::string& file) {
  auto S = load_phase([&] { return io::load_semigroup(file); });
  try {
    clifford_structure C(S);
    const auto& E = C.idempotent_list();
    if (opt.json) {
      io::json comps = io::json::array();
      for (int i = 0; i < C.idempotent_count(); ++i)
        comps.push_back(io::json{{"identity", E[i]},
                                 {"elements", C.component(i)},
                                 {"group_table", C.component_group(i).table_rows()}});
      io::json homs = io::json::array();
      for (int i = 0; i < C.idempotent_count(); ++i)
        for (int j = 0; j < C.idempotent_count(); ++j) {
          if (i == j || !C.natural_leq(E[j], E[i])) continue;
          auto h = C.connecting(E[i], E[j]);
          homs.push_back(io::json{{"from", E[i]}, {"to", E[j]},
                                  {"domain", h.domain}, {"image", h.image}});
        }
      print_json(opt, io::json{{"name", S.display_name()},
                               {"order", S.order()},
                               {"idempotents", E},
                               {"components", comps},
                               {"connecting_homs", homs}});
    } else {
      print(opt, S.display_name() + ": order " + std::to_string(S.order()) +
                     ", idempotents {" + join_names(S, E) + "}");
      for (int i = 0; i < C.idempotent_count(); ++i)
        print(opt, "component G_" + S.name_of(E[i]) + " = {" +
                       join_names(S, C.component(i)) + "}");
      for (int i = 0; i < C.idempotent_count(); ++i)
        for (int j = 0; j < C.idempotent_count(); ++j) {
          if (i == j || !C.natural_leq(E[j], E[i])) continue;
          auto h = C.connecting(E[i], E[j]);
          print(opt, "hom G_" + S.name_of(E[i]) + " -> G_" + S.name_of(E[j]) +
                         ": {" + join_names(S, h.image) + "}");
        }
    }
    return 0;
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return math_exit_code(e);
  }
}

int cmd_check(const options& opt, const std::string& file) {
  auto data = load_phase([&] { return io::load_solution_file(file); });
  try {
    solution s(data.semigroup, data.theta);
    auto raw = check_pentagon_raw(s.raw());
    auto flags = classify(s);
    io::json report{{"valid", true},
                    {"raw_pentagon", raw.holds},
                    {"flags", io::classification_to_json(flags)}};
    bool clifford = static_cast<bool>(is_clifford(s.base()));
    if (clifford) {
      auto K = solution_kernel(s);
      clifford_structure C(s.base());
      auto normal = is_normal_subsemigroup(C, K);
      auto suite = verify_identity_suite(s);
      report["kernel"] = K.elements();
      report["kernel_normal"] = normal.value;
      report["identities"] = io::identity_report_to_json(suite);
      if (opt.json) {
        print_json(opt, report);
      } else {
        print(opt, "axioms: hold");
        print(opt, std::string("raw pentagon relation: ") +
                       (raw.holds ? "holds" : "fails"));
        auto flag_line = [&](const char* name, bool v) {
          print(opt, std::string(name) + ": " + (v ? "yes" : "no"));
        };
        flag_line("commutative", flags.is_commutative);
        flag_line("cocommutative", flags.is_cocommutative);
        flag_line("involutive", flags.is_involutive);
        flag_line("idempotent map", flags.is_idempotent_map);
        flag_line("E-invariant", flags.is_e_invariant.value());
        flag_line("E-fixed", flags.is_e_fixed.value());
        print(opt, "kernel: {" + join_names(s.base(), K.elements()) + "}" +
                       (normal.value ? " (normal subsemigroup)" : ""));
        for (const auto& c : suite.checks)
          if (c.applicable)
            print(opt, std::string(c.passed ? "pass" : "FAIL") + "  " + c.name);
      }
    } else {
      if (opt.json)
        print_json(opt, report);
      else
        print(opt, "axioms: hold (non-Clifford base; E-flags not applicable)");
    }
    return 0;
  } catch (const error& e) {
    if (opt.json && !opt.quiet &&
        (e.kind() == "P1Violated" || e.kind() == "P2Violated"))
      print_json(opt, io::json{{"valid", false},
                               {"axiom", e.kind()},
                               {"witness", e.witness()}});
    std::cerr << e.what() << "\n";
    return math_exit_code(e);
  }
}

int cmd_kernel(const options& opt, const std::string& file) {
  auto data = load_phase([&] { return io::load_solution_file(file); });
  try {
    solution s(data.semigroup, data.theta);
    clifford_structure C(s.base());
    auto K = solution_kernel(s);
    auto normal = is_normal_subsemigroup(C, K);
    if (opt.json)
      print_json(opt, io::json{{"kernel", K.elements()},
                               {"normal", normal.value}});
    else
      print(opt, "kernel: {" + join_names(s.base(), K.elements()) + "}" +
                     (normal.value ? " (normal subsemigroup)" : " (NOT normal)"));
    return normal.value ? 0 : 2;
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return math_exit_code(e);
  }
}

int emit_solution(const options& opt, const solution& s,
                  const std::string& out_file) {
  if (!out_file.empty()) {
    io::save_solution(s, out_file);
    print(opt, "wrote " + out_file);
  } else {
    print_json(opt, io::solution_to_json(s));
  }
  return 0;
}

int cmd_construct_invariant(const options& opt, const std::string& sg_file,
                            const std::string& congruence_file,
                            const std::string& mu_file,
                            const std::string& out_file) {
  auto S = load_phase([&] { return io::load_semigroup(sg_file); });
  auto classes = load_phase([&] { return io::load_class_array(congruence_file); });
  auto mu = load_phase([&] { return io::load_map_array(mu_file); });
  try {
    clifford_structure C(S);
    representative_map m{congruence(S, classes), std::move(mu)};
    return emit_solution(opt, invariant_from_mu(C, m), out_file);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return math_exit_code(e);
  }
}

int cmd_construct_fixed(const options& opt, const std::string& family_file,
                        const std::string& out_file) {
  auto j = load_phase([&] { return io::load_json(family_file); });
  try {
    return emit_solution(opt, fixed_from_components(io::family_from_json(j)),
                         out_file);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return math_exit_code(e);
  }
}

int cmd_construct_fixed_epi(const options& opt, const std::string& spec_file,
                            const std::string& out_file) {
  auto j = load_phase([&] { return io::load_json(spec_file); });
  try {
    return emit_solution(opt, fixed_from_epi_family(io::epi_spec_from_json(j)),
                         out_file);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return math_exit_code(e);
  }
}

int cmd_enumerate(const options& opt, const std::string& file,
                  const std::vector<std::string>& filter_names, bool up_to_iso,
                  const std::string& out_dir) {
  auto S = load_phase([&] { return io::load_semigroup(file); });
  class_filter filter;
  for (const auto& name : filter_names) {
    auto c = solution_class_from_name(name);
    if (!c) {
      std::cerr << "unknown filter: " << name << "\n";
      return 1;
    }
    filter.push_back(*c);
  }
  std::vector<solution> sols =
      up_to_iso ? enumerate_up_to_iso(S, opt.threads)
                : enumerate_solutions(S, filter, opt.threads);
  if (up_to_iso && !filter.empty()) {
    std::vector<solution> kept;
    for (auto& s : sols)
      if (matches_all(classify(s), filter)) kept.push_back(std::move(s));
    sols = std::move(kept);
  }
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (size_t i = 0; i < sols.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), "sol_%04zu.json", i);
      io::save_solution(sols[i], fs::path(out_dir) / name);
    }
  }
  if (opt.json) {
    io::json arr = io::json::array();
    for (const auto& s : sols)
      arr.push_back(io::json{{"theta", s.theta_rows()},
                             {"flags", io::classification_to_json(classify(s))}});
    print_json(opt, io::json{{"count", sols.size()}, {"solutions", arr}});
  } else {
    print(opt, std::to_string(sols.size()) + " solution(s)");
    for (const auto& s : sols) {
      std::string line;
      for (const auto& row : s.theta_rows()) {
        line += "[";
        for (size_t i = 0; i < row.size(); ++i)
          line += (i ? "," : "") + std::to_string(row[i]);
        line += "]";
      }
      print(opt, "  " + line);
    }
  }
  return 0;
}

int cmd_census(const options& opt, const std::string& dir,
               const std::string& format) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) {
    std::cerr << "input error: " << dir << " is not a directory\n";
    return 1;
  }
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<census_entry> entries;
  for (const auto& f : files) {
    try {
      finite_semigroup S = io::load_semigroup(f);
      std::string name =
          S.display_name().empty() ? f.stem().string() : S.display_name();
      entries.push_back(census_one(S, name, opt.threads));
    } catch (const error& e) {
      // per-file problems are collected, not fatal to the batch
      std::cerr << f.string() << ": " << e.what() << "\n";
    }
  }
  if (format == "json")
    print_json(opt, io::census_to_json(entries));
  else if (!opt.quiet)
    std::cout << io::census_to_csv(entries);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finite Clifford semigroups and set-theoretical pentagon solutions"};
  app.require_subcommand(1);
  // global flags may trail the subcommand arguments
  app.fallthrough();

  options opt;
  if (const char* env = std::getenv("PENTAGON_THREADS"))
    opt.threads = std::max(1, std::atoi(env));
  app.add_flag("--json", opt.json, "machine-readable reports");
  app.add_flag("--quiet", opt.quiet, "suppress reports, keep the exit status");
  app.add_option("--threads", opt.threads, "worker threads for enumeration")
      ->check(CLI::PositiveNumber);

  int result = 0;
  std::string file, out_path, congruence_file, mu_file, format = "csv";
  std::vector<std::string> filter_names;
  bool clifford_flag = false, up_to_iso = false;

  auto* validate = app.add_subcommand("validate", "validate a semigroup file");
  validate->add_option("file", file)->required();
  validate->add_flag("--clifford", clifford_flag,
                     "also require the Clifford property");
  validate->callback([&] { result = cmd_validate(opt, file, clifford_flag); });

  auto* analyze = app.add_subcommand(
      "analyze", "idempotents, group components and connecting homs");
  analyze->add_option("file", file)->required();
  analyze->callback([&] { result = cmd_analyze(opt, file); });

  auto* check = app.add_subcommand(
      "check", "axioms, raw pentagon oracle, flags and identity suite");
  check->add_option("file", file)->required();
  check->callback([&] { result = cmd_check(opt, file); });

  auto* kernel = app.add_subcommand("kernel", "kernel of a solution");
  kernel->add_option("file", file)->required();
  kernel->callback([&] { result = cmd_kernel(opt, file); });

  auto* construct = app.add_subcommand("construct", "build solutions");
  construct->require_subcommand(1);
  auto* inv = construct->add_subcommand(
      "invariant", "E-invariant solution from a congruence and mu");
  inv->add_option("semigroup", file)->required();
  inv->add_option("--congruence", congruence_file)->required();
  inv->add_option("--mu", mu_file)->required();
  inv->add_option("--out", out_path);
  inv->callback([&] {
    result = cmd_construct_invariant(opt, file, congruence_file, mu_file,
                                     out_path);
  });
  auto* fixed = construct->add_subcommand(
      "fixed", "E-fixed solution from per-group solutions and connectors");
  fixed->add_option("--family", file)->required();
  fixed->add_option("--out", out_path);
  fixed->callback([&] { result = cmd_construct_fixed(opt, file, out_path); });
  auto* fixed_epi = construct->add_subcommand(
      "fixed-epi", "E-fixed solution from an epimorphism family");
  fixed_epi->add_option("--spec", file)->required();
  fixed_epi->add_option("--out", out_path);
  fixed_epi->callback(
      [&] { result = cmd_construct_fixed_epi(opt, file, out_path); });

  auto* enumerate = app.add_subcommand("enumerate", "all solutions on a semigroup");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("--filter", filter_names,
                        "commutative|cocommutative|involutive|idempotent-map|"
                        "e-invariant|e-fixed|neither (repeatable)");
  enumerate->add_flag("--up-to-iso", up_to_iso,
                      "one representative per isomorphism class");
  enumerate->add_option("--out", out_path, "directory for solution files");
  enumerate->callback([&] {
    result = cmd_enumerate(opt, file, filter_names, up_to_iso, out_path);
  });

  auto* census = app.add_subcommand("census", "classify a directory of semigroups");
  census->add_option("dir", file)->required();
  census->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  census->callback([&] { result = cmd_census(opt, file, format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const cli_failure& f) {
    return f.code;
  }
  return result;
}
