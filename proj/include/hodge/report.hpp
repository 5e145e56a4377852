#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hodge/nilpotent_orbits.hpp"
#include "hodge/sl2_classifier.hpp"

namespace hodge {

/// Parsed command-line query for one domain.
struct DomainQuery {
  std::string type_str;
  std::string grading_str;
  std::optional<std::vector<int>> rep;  // fundamental-weight coefficients
  std::optional<int> weight_n;
  bool diamonds = false;
  bool include_trivial = false;
  std::size_t weyl_cap = 1000000;
};

/// "1,3" (indices) or "1,0,1" (mask of length rank) -> 0/1 mask.
std::vector<int> parse_grading(const std::string& s, int rank);
std::vector<int> parse_csv_ints(const std::string& s);

struct ReportRow {
  std::vector<std::string> sprime;               // pretty base roots
  std::vector<std::vector<int>> sprime_coords;
  std::vector<long long> z_tuple;                // sigma_i(Z)
  std::string z_pretty;
  std::vector<std::string> zeta;                 // rational strings
  std::string zeta_pretty;
  std::vector<std::string> levi_types;
  std::vector<std::string> levi_real_forms;
  long long codim = 0;
  bool hodge_tate = false;
  std::optional<DeligneDiamond> diamond;

  friend bool operator==(const ReportRow&, const ReportRow&);
};

struct ClassificationReport {
  int schema_version = 1;
  std::string type;
  std::vector<int> grading;
  std::string e_pretty;
  std::string real_form;
  std::optional<std::vector<int>> rep;
  std::optional<int> weight_n;
  std::optional<std::vector<long long>> hodge_nums;
  std::vector<ReportRow> rows;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&);
};

ClassificationReport run_classify(const DomainQuery& q);
std::string render_text(const ClassificationReport& r, bool with_diamonds);
nlohmann::json to_json(const ClassificationReport& r);
ClassificationReport classification_from_json(const nlohmann::json& j);

struct HodgeTateReport {
  int schema_version = 1;
  std::string type;
  std::vector<int> grading;
  bool admits = false;
  std::optional<ReportRow> witness;

  friend bool operator==(const HodgeTateReport&, const HodgeTateReport&);
};

HodgeTateReport run_hodge_tate(const DomainQuery& q);
std::string render_text(const HodgeTateReport& r);
nlohmann::json to_json(const HodgeTateReport& r);
HodgeTateReport hodge_tate_from_json(const nlohmann::json& j);

struct OrbitsReport {
  int schema_version = 1;
  std::string type;
  std::vector<CharVector> char_vectors;
  std::vector<std::vector<int>> jm_classes;
  std::vector<std::vector<int>> even_jm_classes;

  friend bool operator==(const OrbitsReport&, const OrbitsReport&);
};

OrbitsReport run_orbits(const std::string& type_str);
std::string render_text(const OrbitsReport& r, bool even_only);
nlohmann::json to_json(const OrbitsReport& r);
OrbitsReport orbits_from_json(const nlohmann::json& j);

std::string render_diamond(const DeligneDiamond& d);

}  // namespace hodge
