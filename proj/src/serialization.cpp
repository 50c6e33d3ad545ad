#include "dctri/serialization.hpp"

#include <algorithm>
#include <fstream>

namespace dctri {

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InputError("invalid integer " + j.dump());
    return x;
  }
  throw InputError("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (!j.is_string()) throw InputError("expected a rational, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t size_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError("expected a nonnegative integer, got " + j.dump());
  return j.get<std::size_t>();
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array, got " + j.dump());
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("expected an integer, got " + x.dump());
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Matroid matroid_from_json(const Json& j) {
  try {
    if (j.is_object() && j.contains("uniform")) {
      const auto& u = j.at("uniform");
      return Matroid::uniform(size_from_json(member(u, "r")), size_from_json(member(u, "n")));
    }
    if (j.is_object() && j.contains("graphic")) {
      const auto& g = j.at("graphic");
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : member(g, "edges")) {
        const auto ends = int_list(e);
        if (ends.size() != 2) throw InputError("graphic edge must have two endpoints");
        edges.emplace_back(ends[0], ends[1]);
      }
      return Matroid::graphic(size_from_json(member(g, "vertices")), edges);
    }
    if (j.is_object() && j.contains("direct_sum")) {
      const auto& parts = j.at("direct_sum");
      if (!parts.is_array() || parts.empty()) throw InputError("direct_sum needs a nonempty list");
      Matroid m = matroid_from_json(parts.front());
      for (std::size_t i = 1; i < parts.size(); ++i) m = Matroid::direct_sum(m, matroid_from_json(parts[i]));
      return m;
    }
    const std::size_t n = size_from_json(member(j, "n"));
    std::vector<std::vector<int>> bases;
    const auto& list = member(j, "bases");
    if (!list.is_array()) throw InputError("\"bases\" must be an array");
    for (const auto& b : list) bases.push_back(int_list(b));
    return Matroid::from_basis_lists(n, bases);
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

Json matroid_to_json(const Matroid& m) {
  Json bases = Json::array();
  for (auto b : m.bases()) bases.push_back(list_from_set(b));
  return {{"n", m.size()}, {"bases", bases}};
}

bool is_submodular_json(const Json& j) {
  return j.is_object() && (j.contains("values") || j.contains("matroid_rank"));
}

namespace {

ElementSet subset_from_key(const std::string& key, std::size_t n) {
  ElementSet s = 0;
  auto add = [&](int e) {
    if (e < 1 || static_cast<std::size_t>(e) > n) throw InputError("subset key \"" + key + "\" names element out of range");
    const ElementSet bit = ElementSet{1} << (e - 1);
    if (s & bit) throw InputError("subset key \"" + key + "\" repeats an element");
    s |= bit;
  };
  if (key.find(',') != std::string::npos || n >= 10) {
    std::size_t pos = 0;
    while (pos < key.size()) {
      const std::size_t next = std::min(key.find(',', pos), key.size());
      const std::string part = key.substr(pos, next - pos);
      if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
        throw InputError("bad subset key \"" + key + "\"");
      add(std::stoi(part));
      pos = next + 1;
    }
  } else {
    for (char c : key) {
      if (c < '1' || c > '9') throw InputError("bad subset key \"" + key + "\"");
      add(c - '0');
    }
  }
  return s;
}

std::string key_from_subset(ElementSet s, std::size_t n) {
  std::string key;
  for (int e : list_from_set(s)) {
    if (n >= 10 && !key.empty()) key += ',';
    key += std::to_string(e);
  }
  return key;
}

}  // namespace

SubmodularFunction submodular_from_json(const Json& j) {
  try {
    if (j.is_object() && j.contains("matroid_rank"))
      return SubmodularFunction::matroid_rank(matroid_from_json(j.at("matroid_rank")));
    const std::size_t n = size_from_json(member(j, "n"));
    if (n == 0 || n > kMaxSubmodularSize) throw InputError("submodular function: n must be in 1..12");
    const auto& values = member(j, "values");
    if (!values.is_object()) throw InputError("\"values\" must be an object");
    std::vector<Integer> table(std::size_t{1} << n);
    std::vector<bool> seen(table.size(), false);
    for (const auto& [key, v] : values.items()) {
      const ElementSet s = subset_from_key(key, n);
      if (seen[s]) throw InputError("subset key \"" + key + "\" given twice");
      seen[s] = true;
      table[s] = integer_from_json(v);
    }
    for (ElementSet s = 0; s < table.size(); ++s)
      if (!seen[s]) throw InputError("missing value for subset \"" + key_from_subset(s, n) + "\"");
    return SubmodularFunction::from_table(n, std::move(table));
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

Json submodular_to_json(const SubmodularFunction& f) {
  Json values = Json::object();
  for (ElementSet s = 0; s < f.table().size(); ++s) values[key_from_subset(s, f.size())] = integer_to_json(f(s));
  return {{"n", f.size()}, {"values", values}};
}

Json points_to_json(const PointConfiguration& p) {
  Json out = Json::array();
  for (const auto& x : p.points()) {
    Json row = Json::array();
    for (const auto& c : x) row.push_back(integer_to_json(c));
    out.push_back(row);
  }
  return out;
}

PointConfiguration points_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("\"points\" must be an array");
  std::vector<IntVector> pts;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("each point must be an array");
    IntVector x;
    for (const auto& c : row) x.push_back(integer_from_json(c));
    pts.push_back(std::move(x));
  }
  try {
    return PointConfiguration(std::move(pts));
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

Json subdivision_to_json(const Subdivision& s, bool emit_certificate) {
  Json cells = Json::array();
  for (const auto& c : s.cells) cells.push_back(c);
  Json out = {{"points", points_to_json(s.base)}, {"cells", cells}};
  if (emit_certificate && s.certificate) {
    const auto& cert = *s.certificate;
    Json levels = Json::array();
    for (const auto& level : cert.levels) {
      Json row = Json::array();
      for (const auto& h : level) row.push_back(rational_to_json(h));
      levels.push_back(row);
    }
    Json c = {{"levels", levels}};
    if (cert.epsilon) {
      c["epsilon"] = rational_to_json(*cert.epsilon);
      Json heights = Json::array();
      for (const auto& h : cert.flat_heights) heights.push_back(rational_to_json(h));
      c["heights"] = heights;
    }
    out["certificate"] = c;
  }
  return out;
}

Subdivision subdivision_from_json(const Json& j) {
  PointConfiguration base = points_from_json(member(j, "points"));
  std::vector<Cell> cells;
  const auto& list = member(j, "cells");
  if (!list.is_array()) throw InputError("\"cells\" must be an array");
  for (const auto& c : list) {
    if (!c.is_array()) throw InputError("each cell must be an array");
    Cell cell;
    for (const auto& i : c) cell.push_back(size_from_json(i));
    cells.push_back(std::move(cell));
  }
  std::optional<RegularityCertificate> cert;
  if (j.contains("certificate") && !j.at("certificate").is_null()) {
    const auto& c = j.at("certificate");
    RegularityCertificate r;
    for (const auto& row : member(c, "levels")) {
      std::vector<Rational> level;
      for (const auto& h : row) level.push_back(rational_from_json(h));
      r.levels.push_back(std::move(level));
    }
    if (c.contains("epsilon")) {
      r.epsilon = rational_from_json(c.at("epsilon"));
      for (const auto& h : member(c, "heights")) r.flat_heights.push_back(rational_from_json(h));
    }
    cert = std::move(r);
  }
  return Subdivision{std::move(base), std::move(cells), std::move(cert)};
}

Json metadata_to_json(const TriangulationRun& run) {
  Json ts = Json::array();
  for (const auto& t : run.t_sequence) ts.push_back(integer_to_json(t));
  return {{"seed", run.seed}, {"t_sequence", ts}, {"split_order", run.split_order}};
}

Json triangulation_run_to_json(const TriangulationRun& run, bool emit_certificate) {
  Json out = subdivision_to_json(run.triangulation, emit_certificate);
  out["metadata"] = metadata_to_json(run);
  return out;
}

Json report_to_json(const VerificationReport& r) {
  auto ints = [](const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(integer_to_json(x));
    return a;
  };
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"check", f.check}, {"detail", f.detail}, {"cells", f.cells}, {"points", f.points}});
  Json flag = {{"status", to_string(r.flag.status)}};
  if (!r.flag.witness.empty()) flag["witness"] = r.flag.witness;
  Json out = {{"passed", r.passed()},
              {"unimodular_all", r.unimodular_all},
              {"face_to_face", r.face_to_face},
              {"covers", r.covers},
              {"regular_certified", to_string(r.regular_certified)},
              {"regular_lexicographic", r.regular_lexicographic},
              {"cells", r.cells},
              {"volume", integer_to_json(r.volume)},
              {"oracle_volume", integer_to_json(r.oracle_volume)},
              {"f_vector", ints(r.f_vector)},
              {"h_vector", ints(r.h_vector)},
              {"flag", flag},
              {"failures", failures}};
  out["regular_numeric"] = r.regular_numeric ? Json(*r.regular_numeric) : Json(nullptr);
  return out;
}

}  // namespace dctri
