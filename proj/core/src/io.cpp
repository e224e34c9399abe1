#include "tassp/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tassp {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw InstanceFormatError(origin + ": " + what);
}

const json& require(const json& obj, const char* field, const std::string& origin) {
  auto it = obj.find(field);
  if (it == obj.end()) fail(origin, std::string("missing field \"") + field + "\"");
  return *it;
}

Point parse_point(const json& j, const std::string& origin, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(origin, what + " must be a [x, y] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Instance instance_from_json(const std::string& text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, std::string("parse error: ") + e.what());
  }
  if (!root.is_object()) fail(origin, "top-level value must be an object");

  const auto& name_j = require(root, "name", origin);
  if (!name_j.is_string()) fail(origin, "field \"name\" must be a string");
  const auto& k_j = require(root, "k", origin);
  const auto& m_j = require(root, "m", origin);
  if (!k_j.is_number_integer()) fail(origin, "field \"k\" must be an integer");
  if (!m_j.is_number_integer()) fail(origin, "field \"m\" must be an integer");

  const auto& depot_j = require(root, "depot", origin);
  std::optional<Point> depot_pos;
  if (!depot_j.is_null()) depot_pos = parse_point(depot_j, origin, "field \"depot\"");

  const auto& targets_j = require(root, "targets", origin);
  if (!targets_j.is_array()) fail(origin, "field \"targets\" must be an array");
  std::vector<Target> targets;
  bool all_positions = depot_pos.has_value();
  for (const auto& tj : targets_j) {
    if (!tj.is_object()) fail(origin, "each target must be an object");
    Target t;
    const auto& id_j = require(tj, "id", origin);
    if (!id_j.is_string()) fail(origin, "target field \"id\" must be a string");
    t.id = id_j.get<std::string>();
    const auto& pos_j = require(tj, "pos", origin);
    if (pos_j.is_null()) {
      all_positions = false;
    } else {
      t.pos = parse_point(pos_j, origin, "target field \"pos\"");
    }
    const auto& p_j = require(tj, "p", origin);
    if (!p_j.is_number()) fail(origin, "target field \"p\" must be a number");
    t.processing = p_j.get<double>();
    targets.push_back(std::move(t));
  }

  auto matrix_it = root.find("matrix");
  const bool has_matrix = matrix_it != root.end() && !matrix_it->is_null();
  if (has_matrix == all_positions)
    fail(origin, "exactly one of (all positions present) or (matrix present) is required");

  Metric metric;
  if (has_matrix) {
    if (!matrix_it->is_array()) fail(origin, "field \"matrix\" must be a list of lists");
    std::vector<std::vector<double>> rows;
    for (const auto& row_j : *matrix_it) {
      if (!row_j.is_array()) fail(origin, "field \"matrix\" must be a list of lists");
      std::vector<double> row;
      for (const auto& v : row_j) {
        if (!v.is_number()) fail(origin, "matrix entries must be numbers");
        row.push_back(v.get<double>());
      }
      rows.push_back(std::move(row));
    }
    if (rows.size() != targets.size() + 1)
      fail(origin, "matrix must be (n+1) x (n+1) indexed [depot, targets...]");
    for (const auto& row : rows)
      if (row.size() != rows.size()) fail(origin, "matrix must be square");
    metric = Metric::explicit_matrix(rows);
  } else {
    std::vector<Point> positions;
    positions.push_back(*depot_pos);
    for (const auto& t : targets) positions.push_back(*t.pos);
    metric = Metric::euclidean(positions);
  }

  Instance instance(name_j.get<std::string>(), k_j.get<int>(), m_j.get<int>(), depot_pos,
                    std::move(targets), std::move(metric));
  auto report = validate(instance);
  if (!report.ok()) {
    std::ostringstream os;
    os << "instance fails validation:";
    for (const auto& v : report.violations) os << "\n  - " << v;
    fail(origin, os.str());
  }
  return instance;
}

std::string instance_to_json(const Instance& instance) {
  json root;
  root["name"] = instance.name();
  root["k"] = instance.k();
  root["m"] = instance.m();
  if (instance.depot_pos())
    root["depot"] = {instance.depot_pos()->x, instance.depot_pos()->y};
  else
    root["depot"] = nullptr;
  root["targets"] = json::array();
  for (const auto& t : instance.targets()) {
    json tj;
    tj["id"] = t.id;
    if (t.pos)
      tj["pos"] = {t.pos->x, t.pos->y};
    else
      tj["pos"] = nullptr;
    tj["p"] = t.processing;
    root["targets"].push_back(std::move(tj));
  }
  if (instance.metric().kind() == Metric::Kind::Explicit) {
    json rows = json::array();
    const int n = instance.num_vertices();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int j = 0; j < n; ++j) row.push_back(instance.metric().cost(i, j));
      rows.push_back(std::move(row));
    }
    root["matrix"] = std::move(rows);
  } else {
    root["matrix"] = nullptr;
  }
  return root.dump(2) + "\n";
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceFormatError(path + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str(), path);
}

void write_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InstanceFormatError(path + ": cannot open for writing");
  out << instance_to_json(instance);
  if (!out) throw InstanceFormatError(path + ": write failed");
}

}  // namespace tassp
