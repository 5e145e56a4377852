#include "hodge/report.hpp"

#include <algorithm>
#include <sstream>

namespace hodge {

using nlohmann::json;

std::vector<int> parse_csv_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw parse_error("empty entry in list '" + s + "'");
    try {
      size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw parse_error("bad integer '" + tok + "'");
    } catch (const std::logic_error&) {
      throw parse_error("bad integer '" + tok + "' in list '" + s + "'");
    }
  }
  if (out.empty()) throw parse_error("empty list");
  return out;
}

std::vector<int> parse_grading(const std::string& s, int rank) {
  auto vals = parse_csv_ints(s);
  bool mask_shape = static_cast<int>(vals.size()) == rank &&
                    std::all_of(vals.begin(), vals.end(), [](int v) { return v == 0 || v == 1; });
  std::vector<int> mask(rank, 0);
  if (mask_shape) {
    mask = vals;
  } else {
    for (int i : vals) {
      if (i < 1 || i > rank)
        throw parse_error("grading index " + std::to_string(i) + " out of range 1.." +
                          std::to_string(rank));
      mask[i - 1] = 1;
    }
  }
  int ones = 0;
  for (int v : mask) ones += v;
  if (ones == 0) throw parse_error("grading selects no simple roots");
  return mask;
}

namespace {

ReportRow make_row(const RootSystem& rs, const SL2Class& c) {
  ReportRow row;
  for (int b : c.base) {
    row.sprime.push_back(rs.pretty_root(rs.root(b)));
    row.sprime_coords.push_back(rs.root(b));
  }
  row.z_tuple = c.z.int_tuple();
  row.z_pretty = rs.pretty_h(c.z.s);
  for (const auto& x : c.zeta.s) row.zeta.push_back(x.str());
  row.zeta_pretty = rs.pretty_h(c.zeta.s);
  for (const auto& comp : c.components) row.levi_types.push_back(comp.type.str());
  std::sort(row.levi_types.begin(), row.levi_types.end());
  row.levi_real_forms = c.levi_real_forms;
  row.codim = c.codim;
  row.hodge_tate = c.hodge_tate;
  return row;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::string tuple_str(const std::vector<long long>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

ClassificationReport run_classify(const DomainQuery& q) {
  CartanType t = CartanType::parse(q.type_str);
  MTDomainSpec spec{t, parse_grading(q.grading_str, t.rank)};
  Domain d = Domain::build(spec, q.weyl_cap);

  ClassificationReport r;
  r.type = t.str();
  r.grading = spec.grading;
  r.e_pretty = d.rs->pretty_h(d.e.s);
  r.real_form = identify_real_form(*d.rs, d.e).display();

  WeightSystem ws;
  int n = 0;
  if (q.rep) {
    if (static_cast<int>(q.rep->size()) != t.rank)
      throw parse_error("rep has " + std::to_string(q.rep->size()) + " entries for rank " +
                        std::to_string(t.rank));
    n = q.weight_n.value_or(0);
    ws = weight_system(*d.rs, *q.rep);
    r.rep = q.rep;
    r.weight_n = n;
    auto h = hodge_numbers(*d.rs, ws, d.e, n);
    r.hodge_nums = h.h;
  } else {
    ws = adjoint_weight_system(*d.rs);
    n = 0;
  }

  ClassifyOptions opts;
  opts.weyl_cap = q.weyl_cap;
  opts.include_trivial = q.include_trivial;
  for (const auto& c : classify(d, opts)) {
    ReportRow row = make_row(*d.rs, c);
    if (q.diamonds && c.levi.roots.any())
      row.diamond = deligne_diamond(*d.rs, d.e, c.z, ws, n);
    r.rows.push_back(std::move(row));
  }
  return r;
}

HodgeTateReport run_hodge_tate(const DomainQuery& q) {
  CartanType t = CartanType::parse(q.type_str);
  MTDomainSpec spec{t, parse_grading(q.grading_str, t.rank)};
  Domain d = Domain::build(spec, q.weyl_cap);
  HodgeTateReport r;
  r.type = t.str();
  r.grading = spec.grading;
  auto v = admits_hodge_tate(d, {q.weyl_cap, false});
  r.admits = v.admits;
  if (v.witness) r.witness = make_row(*d.rs, *v.witness);
  return r;
}

OrbitsReport run_orbits(const std::string& type_str) {
  CartanType t = CartanType::parse(type_str);
  RootSystem rs = RootSystem::build(t);
  OrbitsReport r;
  r.type = t.str();
  for (const auto& cv : enumerate_char_vectors(rs)) r.char_vectors.push_back(cv);
  for (const auto& cls : jm_parabolic_classes(rs)) {
    std::vector<int> v(cls.begin(), cls.end());
    r.jm_classes.push_back(v);
    if (is_even_jm(rs, cls)) r.even_jm_classes.push_back(v);
  }
  auto by_size = [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  };
  std::sort(r.jm_classes.begin(), r.jm_classes.end(), by_size);
  std::sort(r.even_jm_classes.begin(), r.even_jm_classes.end(), by_size);
  return r;
}

std::string render_diamond(const DeligneDiamond& d) {
  if (d.cells.empty()) return "(empty)\n";
  int pmin = d.cells.front().first.first, pmax = pmin;
  int qmin = d.cells.front().first.second, qmax = qmin;
  for (const auto& c : d.cells) {
    pmin = std::min(pmin, c.first.first);
    pmax = std::max(pmax, c.first.first);
    qmin = std::min(qmin, c.first.second);
    qmax = std::max(qmax, c.first.second);
  }
  std::string out;
  for (int q = qmax; q >= qmin; --q) {
    out += "  q=" + std::to_string(q) + (q >= 0 ? " " : "") + " ";
    for (int p = pmin; p <= pmax; ++p) out += d.at(p, q) > 0 ? " *" : " .";
    out += "\n";
  }
  out += "       p=" + std::to_string(pmin) + ".." + std::to_string(pmax) + "\n";
  return out;
}

std::string render_text(const ClassificationReport& r, bool with_diamonds) {
  std::ostringstream os;
  os << "domain " << r.type << "  grading (";
  for (std::size_t i = 0; i < r.grading.size(); ++i) os << (i ? "," : "") << r.grading[i];
  os << ")  E = " << r.e_pretty << "\n";
  os << "real form " << r.real_form << "\n";
  if (r.rep) {
    os << "rep omega=(";
    for (std::size_t i = 0; i < r.rep->size(); ++i) os << (i ? "," : "") << (*r.rep)[i];
    os << ")  n=" << *r.weight_n << "  h=(";
    for (std::size_t i = 0; i < r.hodge_nums->size(); ++i)
      os << (i ? "," : "") << (*r.hodge_nums)[i];
    os << ")\n";
  }
  os << r.rows.size() << " classes\n";

  std::vector<std::vector<std::string>> table;
  table.push_back({"#", "codim", "HT", "S'", "Z", "sigma(Z)", "zeta", "l^ss"});
  int idx = 0;
  for (const auto& row : r.rows) {
    ++idx;
    table.push_back({std::to_string(idx), std::to_string(row.codim),
                     row.hodge_tate ? "yes" : "no", "{" + join(row.sprime, ", ") + "}",
                     row.z_pretty, tuple_str(row.z_tuple), row.zeta_pretty,
                     join(row.levi_real_forms, " x ")});
  }
  std::vector<std::size_t> widths(table[0].size(), 0);
  for (const auto& line : table)
    for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], line[c].size());
  for (const auto& line : table) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      os << line[c];
      if (c + 1 < line.size()) os << std::string(widths[c] - line[c].size() + 2, ' ');
    }
    os << "\n";
  }
  if (with_diamonds) {
    idx = 0;
    for (const auto& row : r.rows) {
      ++idx;
      if (!row.diamond) continue;
      os << "diamond for class " << idx << " (n=" << row.diamond->n << "):\n"
         << render_diamond(*row.diamond);
    }
  }
  return os.str();
}

std::string render_text(const HodgeTateReport& r) {
  std::ostringstream os;
  os << "domain " << r.type << "  grading (";
  for (std::size_t i = 0; i < r.grading.size(); ++i) os << (i ? "," : "") << r.grading[i];
  os << ")\n";
  if (r.admits)
    os << "yes, S'={" << join(r.witness->sprime, ", ") << "}, Z=" << r.witness->z_pretty << "\n";
  else
    os << "no\n";
  return os.str();
}

std::string render_text(const OrbitsReport& r, bool even_only) {
  std::ostringstream os;
  auto sets = [&](const std::vector<std::vector<int>>& cls) {
    std::string out;
    for (const auto& v : cls) {
      out += "{";
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
      out += "} ";
    }
    return out;
  };
  if (even_only) {
    os << r.type << ": " << r.even_jm_classes.size() << " even Jacobson-Morosov classes\n"
       << sets(r.even_jm_classes) << "\n";
    return os.str();
  }
  os << r.type << ": " << r.char_vectors.size() << " nilpotent orbits\n";
  for (const auto& cv : r.char_vectors) {
    os << "(";
    for (std::size_t i = 0; i < cv.size(); ++i) os << (i ? "," : "") << cv[i];
    os << ") ";
  }
  os << "\nJacobson-Morosov classes: " << sets(r.jm_classes) << "\n";
  os << "even Jacobson-Morosov: " << sets(r.even_jm_classes) << "\n";
  return os.str();
}

// --- JSON ------------------------------------------------------------------

namespace {

json diamond_to_json(const DeligneDiamond& d) {
  json cells = json::array();
  for (const auto& c : d.cells)
    cells.push_back({c.first.first, c.first.second, c.second});
  return json{{"n", d.n}, {"cells", cells}};
}

DeligneDiamond diamond_from_json(const json& j) {
  DeligneDiamond d;
  d.n = j.at("n").get<int>();
  for (const auto& c : j.at("cells"))
    d.cells.push_back({{c.at(0).get<int>(), c.at(1).get<int>()}, c.at(2).get<long long>()});
  return d;
}

json row_to_json(const ReportRow& r) {
  json j{{"sprime", r.sprime},
         {"sprime_coords", r.sprime_coords},
         {"z", r.z_tuple},
         {"z_pretty", r.z_pretty},
         {"zeta", r.zeta},
         {"zeta_pretty", r.zeta_pretty},
         {"levi_types", r.levi_types},
         {"levi_real_forms", r.levi_real_forms},
         {"codim", r.codim},
         {"hodge_tate", r.hodge_tate}};
  if (r.diamond) j["diamond"] = diamond_to_json(*r.diamond);
  return j;
}

ReportRow row_from_json(const json& j) {
  ReportRow r;
  r.sprime = j.at("sprime").get<std::vector<std::string>>();
  r.sprime_coords = j.at("sprime_coords").get<std::vector<std::vector<int>>>();
  r.z_tuple = j.at("z").get<std::vector<long long>>();
  r.z_pretty = j.at("z_pretty").get<std::string>();
  r.zeta = j.at("zeta").get<std::vector<std::string>>();
  r.zeta_pretty = j.at("zeta_pretty").get<std::string>();
  r.levi_types = j.at("levi_types").get<std::vector<std::string>>();
  r.levi_real_forms = j.at("levi_real_forms").get<std::vector<std::string>>();
  r.codim = j.at("codim").get<long long>();
  r.hodge_tate = j.at("hodge_tate").get<bool>();
  if (j.contains("diamond")) r.diamond = diamond_from_json(j.at("diamond"));
  return r;
}

}  // namespace

bool operator==(const ReportRow& a, const ReportRow& b) {
  return a.sprime == b.sprime && a.sprime_coords == b.sprime_coords && a.z_tuple == b.z_tuple &&
         a.z_pretty == b.z_pretty && a.zeta == b.zeta && a.zeta_pretty == b.zeta_pretty &&
         a.levi_types == b.levi_types && a.levi_real_forms == b.levi_real_forms &&
         a.codim == b.codim && a.hodge_tate == b.hodge_tate && a.diamond == b.diamond;
}

bool operator==(const ClassificationReport& a, const ClassificationReport& b) {
  return a.schema_version == b.schema_version && a.type == b.type && a.grading == b.grading &&
         a.e_pretty == b.e_pretty && a.real_form == b.real_form && a.rep == b.rep &&
         a.weight_n == b.weight_n && a.hodge_nums == b.hodge_nums && a.rows == b.rows;
}

bool operator==(const HodgeTateReport& a, const HodgeTateReport& b) {
  return a.schema_version == b.schema_version && a.type == b.type && a.grading == b.grading &&
         a.admits == b.admits && a.witness == b.witness;
}

bool operator==(const OrbitsReport& a, const OrbitsReport& b) {
  return a.schema_version == b.schema_version && a.type == b.type &&
         a.char_vectors == b.char_vectors && a.jm_classes == b.jm_classes &&
         a.even_jm_classes == b.even_jm_classes;
}

json to_json(const ClassificationReport& r) {
  json j{{"schema_version", r.schema_version},
         {"command", "classify"},
         {"type", r.type},
         {"grading", r.grading},
         {"E", r.e_pretty},
         {"real_form", r.real_form}};
  if (r.rep) {
    j["rep"] = *r.rep;
    j["n"] = *r.weight_n;
    j["hodge_numbers"] = *r.hodge_nums;
  }
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back(row_to_json(row));
  j["classes"] = rows;
  return j;
}

ClassificationReport classification_from_json(const json& j) {
  ClassificationReport r;
  r.schema_version = j.at("schema_version").get<int>();
  r.type = j.at("type").get<std::string>();
  r.grading = j.at("grading").get<std::vector<int>>();
  r.e_pretty = j.at("E").get<std::string>();
  r.real_form = j.at("real_form").get<std::string>();
  if (j.contains("rep")) {
    r.rep = j.at("rep").get<std::vector<int>>();
    r.weight_n = j.at("n").get<int>();
    r.hodge_nums = j.at("hodge_numbers").get<std::vector<long long>>();
  }
  for (const auto& row : j.at("classes")) r.rows.push_back(row_from_json(row));
  return r;
}

json to_json(const HodgeTateReport& r) {
  json j{{"schema_version", r.schema_version},
         {"command", "hodge-tate"},
         {"type", r.type},
         {"grading", r.grading},
         {"admits", r.admits}};
  if (r.witness) j["witness"] = row_to_json(*r.witness);
  return j;
}

HodgeTateReport hodge_tate_from_json(const json& j) {
  HodgeTateReport r;
  r.schema_version = j.at("schema_version").get<int>();
  r.type = j.at("type").get<std::string>();
  r.grading = j.at("grading").get<std::vector<int>>();
  r.admits = j.at("admits").get<bool>();
  if (j.contains("witness")) r.witness = row_from_json(j.at("witness"));
  return r;
}

json to_json(const OrbitsReport& r) {
  return json{{"schema_version", r.schema_version},
              {"command", "orbits"},
              {"type", r.type},
              {"char_vectors", r.char_vectors},
              {"jm_classes", r.jm_classes},
              {"even_jm_classes", r.even_jm_classes}};
}

OrbitsReport orbits_from_json(const json& j) {
  OrbitsReport r;
  r.schema_version = j.at("schema_version").get<int>();
  r.type = j.at("type").get<std::string>();
  r.char_vectors = j.at("char_vectors").get<std::vector<CharVector>>();
  r.jm_classes = j.at("jm_classes").get<std::vector<std::vector<int>>>();
  r.even_jm_classes = j.at("even_jm_classes").get<std::vector<std::vector<int>>>();
  return r;
}

}  // namespace hodge
