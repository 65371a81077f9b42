#include "scenemem/logio.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scenemem/errors.hpp"

namespace scenemem {

namespace {

using nlohmann::json;

Degree parse_degree(const json& j, const char* where) {
  if (!j.is_number()) {
    throw InputError(std::string(where) + ": degree must be a number");
  }
  const double v = j.get<double>();
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InputError(std::string(where) + ": degree outside [0,1]");
  }
  return Degree(v);
}

std::int64_t parse_timestamp(const json& j) {
  if (!j.contains("t") || !j.at("t").is_number_integer()) {
    throw InputError("record needs an integer timestamp field \"t\"");
  }
  return j.at("t").get<std::int64_t>();
}

TypeMemberships parse_memberships(const json& j, const char* where) {
  if (!j.is_object()) {
    throw InputError(std::string(where) + ": type memberships must be an object");
  }
  TypeMemberships memberships;
  for (const auto& [type, degree] : j.items()) {
    memberships.emplace(type, parse_degree(degree, where));
  }
  return memberships;
}

Observation observation_from_json(const json& j) {
  if (!j.is_object()) {
    throw InputError("observation record must be a JSON object");
  }
  if (j.contains("objects")) {
    throw InputError("record looks like a position frame, not an observation");
  }
  Observation obs;
  obs.timestamp = parse_timestamp(j);
  if (j.contains("elements")) {
    if (!j.at("elements").is_object()) {
      throw InputError("\"elements\" must be an object");
    }
    for (const auto& [id, memberships] : j.at("elements").items()) {
      obs.elements.emplace(id, parse_memberships(memberships, "elements"));
    }
  }
  if (j.contains("assertions")) {
    if (!j.at("assertions").is_array()) {
      throw InputError("\"assertions\" must be an array");
    }
    for (const auto& a : j.at("assertions")) {
      if (!a.is_array() || a.size() != 4 || !a[0].is_string() ||
          !a[1].is_string() || !a[2].is_string()) {
        throw InputError("assertion must be [subject, object, role, degree]");
      }
      obs.assertions.push_back({a[0].get<std::string>(), a[1].get<std::string>(),
                                a[2].get<std::string>(),
                                parse_degree(a[3], "assertions")});
    }
  }
  return obs;
}

PositionFrame frame_from_json(const json& j) {
  if (!j.is_object()) {
    throw InputError("position record must be a JSON object");
  }
  if (j.contains("elements") || j.contains("assertions")) {
    throw InputError("record looks like an observation, not a position frame");
  }
  PositionFrame frame;
  frame.timestamp = parse_timestamp(j);
  if (j.contains("objects")) {
    if (!j.at("objects").is_array()) {
      throw InputError("\"objects\" must be an array");
    }
    for (const auto& o : j.at("objects")) {
      if (!o.is_array() || o.size() != 4 || !o[0].is_string() ||
          !o[2].is_number() || !o[3].is_number()) {
        throw InputError("object must be [id, memberships, x, y]");
      }
      frame.objects.push_back({o[0].get<std::string>(),
                               parse_memberships(o[1], "objects"),
                               o[2].get<double>(), o[3].get<double>()});
    }
  }
  return frame;
}

template <typename Record, typename Parser>
std::vector<Record> read_lines(std::istream& in, Parser parse) {
  std::vector<Record> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(parse(json::parse(line)));
    } catch (const json::exception& e) {
      throw InputError("log line " + std::to_string(line_no) + ": " + e.what());
    } catch (const InputError& e) {
      throw InputError("log line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open file: " + path);
  }
  return in;
}

}  // namespace

std::vector<Observation> read_observation_log(std::istream& in) {
  return read_lines<Observation>(in, observation_from_json);
}

std::vector<Observation> read_observation_log_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_observation_log(in);
}

std::vector<PositionFrame> read_position_log(std::istream& in) {
  return read_lines<PositionFrame>(in, frame_from_json);
}

std::vector<PositionFrame> read_position_log_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_position_log(in);
}

std::string observation_to_json_line(const Observation& obs) {
  json j;
  j["t"] = obs.timestamp;
  j["elements"] = json::object();
  for (const auto& [id, memberships] : obs.elements) {
    json m = json::object();
    for (const auto& [type, degree] : memberships) m[type] = degree.value();
    j["elements"][id] = std::move(m);
  }
  j["assertions"] = json::array();
  for (const auto& a : obs.assertions) {
    j["assertions"].push_back({a.subject, a.object, a.role, a.degree.value()});
  }
  return j.dump();
}

}  // namespace scenemem
