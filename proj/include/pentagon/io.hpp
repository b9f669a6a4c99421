#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "pentagon/clifford.hpp"
#include "pentagon/congruence.hpp"
#include "pentagon/constructions.hpp"
#include "pentagon/enumeration.hpp"
#include "pentagon/solution.hpp"

namespace pentagon::io {

using nlohmann::json;

// semigroup files: {"name": str, "elements": [str...], "table": [[int...]...]}
finite_semigroup semigroup_from_json(const json& j);
json semigroup_to_json(const finite_semigroup& S);
finite_semigroup load_semigroup(const std::filesystem::path& file);

// solution files: {"semigroup": <path or inline object>, "theta": [[int...]...]}
struct solution_file {
  finite_semigroup semigroup;
  std::vector<std::vector<int>> theta;  // unvalidated
};
solution_file load_solution_file(const std::filesystem::path& file);
solution solution_from_json(const json& j,
                            const std::filesystem::path& base_dir);
json solution_to_json(const solution& s);
void save_solution(const solution& s, const std::filesystem::path& file);

// congruence files: {"classes": [int,...]}, class id per element
std::vector<int> load_class_array(const std::filesystem::path& file);
json congruence_to_json(const congruence& rho);

// representative-map files: {"map": [int,...]}
std::vector<int> load_map_array(const std::filesystem::path& file);

// semilattice spec files:
// {"meets": [[int]], "groups": [{"table": [[int]]}],
//  "homs": [{"from": int, "to": int, "map": [int]}]}
semilattice_spec semilattice_spec_from_json(const json& j);
json semilattice_spec_to_json(const semilattice_spec& spec);

// component family files:
// {"semilattice_spec": ..., "group_solutions": [{"e": int, "theta": [[int]]}],
//  "connectors": [{"from": int, "to": int, "map": [int]}]}
// Connectors for comparable pairs default to the connecting homs and may
// be omitted; all other ordered pairs must be present.
component_solution_family family_from_json(const json& j);
epi_family_spec epi_spec_from_json(const json& j);

json classification_to_json(const classification_flags& flags);
json identity_report_to_json(const identity_report& report);
json census_to_json(const std::vector<census_entry>& entries);
std::string census_to_csv(const std::vector<census_entry>& entries);

json load_json(const std::filesystem::path& file);
void write_text(const std::filesystem::path& file, const std::string& text);

}  // namespace pentagon::io
