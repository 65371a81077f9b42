#include "scenemem/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scenemem/errors.hpp"

namespace scenemem {

namespace {

using nlohmann::json;

double number_or(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) {
    throw InputError(std::string("config: \"") + key + "\" must be a number");
  }
  return j.at(key).get<double>();
}

Signature parse_signature(const json& j) {
  if (!j.is_object() || !j.contains("roles") || !j.contains("types")) {
    throw InputError("config: \"signature\" needs \"roles\" and \"types\"");
  }
  std::vector<std::pair<std::string, std::string>> inverse_pairs;
  if (j.contains("inverse_pairs")) {
    for (const auto& pair : j.at("inverse_pairs")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string()) {
        throw InputError("config: inverse pair must be [role, role]");
      }
      inverse_pairs.emplace_back(pair[0].get<std::string>(),
                                 pair[1].get<std::string>());
    }
  }
  std::vector<std::string> symmetric;
  if (j.contains("symmetric_roles")) {
    symmetric = j.at("symmetric_roles").get<std::vector<std::string>>();
  }
  return Signature(j.at("roles").get<std::vector<std::string>>(),
                   j.at("types").get<std::vector<std::string>>(),
                   std::move(inverse_pairs), std::move(symmetric));
}

MemoryParams parse_params(const json& j) {
  MemoryParams p;
  p.initial_score = number_or(j, "initial_score", p.initial_score);
  p.fuzziness = number_or(j, "fuzziness", p.fuzziness);
  p.learn_degree_threshold =
      number_or(j, "learn_degree_threshold", p.learn_degree_threshold);
  p.learn_similarity_threshold =
      number_or(j, "learn_similarity_threshold", p.learn_similarity_threshold);
  p.reinforce_degree_threshold =
      number_or(j, "reinforce_degree_threshold", p.reinforce_degree_threshold);
  p.reinforce_similarity_threshold = number_or(
      j, "reinforce_similarity_threshold", p.reinforce_similarity_threshold);
  p.score_weight = number_or(j, "score_weight", p.score_weight);
  p.forget_threshold = number_or(j, "forget_threshold", p.forget_threshold);
  if (j.contains("consolidation_period")) {
    if (!j.at("consolidation_period").is_number_integer()) {
      throw InputError("config: \"consolidation_period\" must be an integer");
    }
    p.consolidation_period = j.at("consolidation_period").get<int>();
  }
  if (j.contains("retrieve_learns")) {
    if (!j.at("retrieve_learns").is_boolean()) {
      throw InputError("config: \"retrieve_learns\" must be a boolean");
    }
    p.retrieve_learns = j.at("retrieve_learns").get<bool>();
  }
  return p;
}

}  // namespace

EngineConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("signature")) {
    throw InputError("config must be an object with a \"signature\" section");
  }

  Signature sig = parse_signature(doc.at("signature"));
  MemoryParams params =
      doc.contains("params") ? parse_params(doc.at("params")) : MemoryParams{};
  params.validate();

  double d_max = 0.15;
  std::string connection_role;
  if (doc.contains("ingest")) {
    const auto& ingest = doc.at("ingest");
    d_max = number_or(ingest, "d_max", d_max);
    if (ingest.contains("connection_role")) {
      connection_role = ingest.at("connection_role").get<std::string>();
    }
  }
  if (connection_role.empty() && sig.symmetric_roles().size() == 1) {
    connection_role = sig.symmetric_roles().front();
  }
  if (!connection_role.empty() && !sig.is_symmetric(connection_role)) {
    throw InputError("config: connection role '" + connection_role +
                     "' is not a symmetric role");
  }
  if (!(d_max > 0.0)) {
    throw InputError("config: d_max must be positive");
  }

  return EngineConfig{std::move(sig), params, d_max, std::move(connection_role)};
}

EngineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open config file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace scenemem
