#include "pentagon/io.hpp"

#include <fstream>
#include <sstream>

namespace pentagon::io {

namespace {

json expect(const json& j, const char* key) {
  if (!j.contains(key))
    throw error("ParseError", std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::vector<std::vector<int>> int_matrix(const json& j, const char* what) {
  if (!j.is_array())
    throw error("ParseError", std::string(what) + " must be an array of rows");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array())
      throw error("ParseError", std::string(what) + " rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw error("ParseError",
                    std::string(what) + " entries must be integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array())
    throw error("ParseError", std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw error("ParseError", std::string(what) + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json load_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in)
    throw error("ParseError", "cannot open " + file.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw error("ParseError", file.string() + ": " + e.what());
  }
  return j;
}

void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file);
  if (!out)
    throw error("ParseError", "cannot write " + file.string());
  out << text;
}

finite_semigroup semigroup_from_json(const json& j) {
  auto table = int_matrix(expect(j, "table"), "table");
  std::vector<std::string> names;
  if (j.contains("elements"))
    for (const auto& e : j.at("elements")) names.push_back(e.get<std::string>());
  std::string name = j.value("name", "");
  return finite_semigroup(static_cast<int>(table.size()), table,
                          std::move(names), std::move(name));
}

json semigroup_to_json(const finite_semigroup& S) {
  return json{{"name", S.display_name()},
              {"elements", S.names()},
              {"table", S.table_rows()}};
}

finite_semigroup load_semigroup(const std::filesystem::path& file) {
  return semigroup_from_json(load_json(file));
}

solution_file load_solution_file(const std::filesystem::path& file) {
  json j = load_json(file);
  json sg = expect(j, "semigroup");
  finite_semigroup S =
      sg.is_string()
          ? load_semigroup(file.parent_path() / sg.get<std::string>())
          : semigroup_from_json(sg);
  return {std::move(S), int_matrix(expect(j, "theta"), "theta")};
}

solution solution_from_json(const json& j,
                            const std::filesystem::path& base_dir) {
  json sg = expect(j, "semigroup");
  finite_semigroup S = sg.is_string()
                           ? load_semigroup(base_dir / sg.get<std::string>())
                           : semigroup_from_json(sg);
  return solution(std::move(S), int_matrix(expect(j, "theta"), "theta"));
}

json solution_to_json(const solution& s) {
  return json{{"semigroup", semigroup_to_json(s.base())},
              {"theta", s.theta_rows()}};
}

void save_solution(const solution& s, const std::filesystem::path& file) {
  write_text(file, solution_to_json(s).dump(2) + "\n");
}

std::vector<int> load_class_array(const std::filesystem::path& file) {
  return int_array(expect(load_json(file), "classes"), "classes");
}

json congruence_to_json(const congruence& rho) {
  return json{{"classes", rho.classes()}};
}

std::vector<int> load_map_array(const std::filesystem::path& file) {
  return int_array(expect(load_json(file), "map"), "map");
}

semilattice_spec semilattice_spec_from_json(const json& j) {
  semilattice_spec spec;
  spec.meets = int_matrix(expect(j, "meets"), "meets");
  for (const auto& g : expect(j, "groups"))
    spec.groups.push_back(int_matrix(expect(g, "table"), "group table"));
  if (j.contains("homs"))
    for (const auto& h : j.at("homs")) {
      semilattice_spec::hom hom;
      hom.from = expect(h, "from").get<int>();
      hom.to = expect(h, "to").get<int>();
      hom.map = int_array(expect(h, "map"), "hom map");
      spec.homs.push_back(std::move(hom));
    }
  return spec;
}

json semilattice_spec_to_json(const semilattice_spec& spec) {
  json groups = json::array();
  for (const auto& g : spec.groups) groups.push_back(json{{"table", g}});
  json homs = json::array();
  for (const auto& h : spec.homs)
    homs.push_back(json{{"from", h.from}, {"to", h.to}, {"map", h.map}});
  return json{{"meets", spec.meets}, {"groups", groups}, {"homs", homs}};
}

namespace {

// shared by family_from_json / epi_spec_from_json
std::pair<clifford_structure, std::vector<std::vector<std::vector<int>>>>
structure_and_thetas(const json& j) {
  semilattice_spec spec = semilattice_spec_from_json(expect(j, "semilattice_spec"));
  clifford_structure C(build_from_semilattice(spec));
  const int k = C.idempotent_count();
  std::vector<std::vector<std::vector<int>>> thetas(static_cast<size_t>(k));
  for (const auto& gs : expect(j, "group_solutions")) {
    int e = expect(gs, "e").get<int>();
    if (e < 0 || e >= k)
      throw error("ParseError", "group_solutions node index out of range");
    thetas[e] = int_matrix(expect(gs, "theta"), "group theta");
  }
  for (int i = 0; i < k; ++i)
    if (thetas[i].empty())
      throw error("ParseError",
                  "missing group solution for node " + std::to_string(i));
  return {std::move(C), std::move(thetas)};
}

}  // namespace

component_solution_family family_from_json(const json& j) {
  auto [C, thetas] = structure_and_thetas(j);
  component_solution_family fam{std::move(C), std::move(thetas), {}};
  const clifford_structure& S = fam.structure;
  const auto& E = S.idempotent_list();
  const int k = S.idempotent_count();
  fam.connectors.assign(static_cast<size_t>(k),
                        std::vector<std::vector<int>>(static_cast<size_t>(k)));
  // comparable pairs default to the connecting homomorphisms
  for (int i = 0; i < k; ++i)
    for (int f = 0; f < k; ++f) {
      if (!S.natural_leq(E[f], E[i])) continue;
      connecting_hom phi = S.connecting(E[i], E[f]);
      std::vector<int> local(phi.image.size());
      for (size_t x = 0; x < phi.image.size(); ++x)
        local[x] = S.local_index(phi.image[x]);
      fam.connectors[i][f] = std::move(local);
    }
  if (j.contains("connectors"))
    for (const auto& c : j.at("connectors")) {
      int from = expect(c, "from").get<int>();
      int to = expect(c, "to").get<int>();
      if (from < 0 || from >= k || to < 0 || to >= k)
        throw error("ParseError", "connector node index out of range");
      fam.connectors[from][to] = int_array(expect(c, "map"), "connector map");
    }
  for (int i = 0; i < k; ++i)
    for (int f = 0; f < k; ++f)
      if (fam.connectors[i][f].empty())
        throw error("ParseError", "missing connector for node pair " +
                                      std::to_string(i) + " -> " +
                                      std::to_string(f));
  return fam;
}

epi_family_spec epi_spec_from_json(const json& j) {
  auto [C, thetas] = structure_and_thetas(j);
  return {std::move(C), std::move(thetas)};
}

json classification_to_json(const classification_flags& flags) {
  json j{{"commutative", flags.is_commutative},
         {"cocommutative", flags.is_cocommutative},
         {"involutive", flags.is_involutive},
         {"idempotent_map", flags.is_idempotent_map}};
  j["e_invariant"] = flags.is_e_invariant.has_value()
                         ? json(*flags.is_e_invariant)
                         : json(nullptr);
  j["e_fixed"] =
      flags.is_e_fixed.has_value() ? json(*flags.is_e_fixed) : json(nullptr);
  return j;
}

json identity_report_to_json(const identity_report& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry{{"name", c.name}, {"applicable", c.applicable}};
    if (c.applicable) {
      entry["passed"] = c.passed;
      if (!c.passed) entry["witness"] = c.witness;
    }
    checks.push_back(std::move(entry));
  }
  return json{{"checks", checks}, {"all_passed", report.all_passed()}};
}

namespace {

json count_or_null(long long v) { return v < 0 ? json(nullptr) : json(v); }

}  // namespace

json census_to_json(const std::vector<census_entry>& entries) {
  json out = json::array();
  for (const auto& e : entries) {
    json reps = json::array();
    for (const auto& r : e.representatives) {
      reps.push_back(json{{"theta", r.theta_rows()},
                          {"flags", classification_to_json(classify(r))}});
    }
    out.push_back(json{{"name", e.name},
                       {"order", e.order},
                       {"n_idempotents", e.n_idempotents},
                       {"component_sizes", e.component_sizes},
                       {"total", e.total},
                       {"n_iso_classes", e.n_iso_classes},
                       {"n_commutative", e.n_commutative},
                       {"n_cocommutative", e.n_cocommutative},
                       {"n_involutive", e.n_involutive},
                       {"n_idempotent_map", e.n_idempotent_map},
                       {"n_E_invariant", count_or_null(e.n_e_invariant)},
                       {"n_E_fixed", count_or_null(e.n_e_fixed)},
                       {"n_neither", count_or_null(e.n_neither)},
                       {"representatives", reps}});
  }
  return out;
}

std::string census_to_csv(const std::vector<census_entry>& entries) {
  std::ostringstream out;
  out << "name,order,n_idempotents,total,n_iso_classes,n_commutative,"
         "n_cocommutative,n_involutive,n_idempotent_map,n_E_invariant,"
         "n_E_fixed,n_neither\n";
  auto cell = [](long long v) {
    return v < 0 ? std::string() : std::to_string(v);
  };
  for (const auto& e : entries) {
    out << e.name << ',' << e.order << ',' << e.n_idempotents << ','
        << e.total << ',' << e.n_iso_classes << ',' << e.n_commutative << ','
        << e.n_cocommutative << ',' << e.n_involutive << ','
        << e.n_idempotent_map << ',' << cell(e.n_e_invariant) << ','
        << cell(e.n_e_fixed) << ',' << cell(e.n_neither) << '\n';
  }
  return out.str();
}

}  // namespace pentagon::io
