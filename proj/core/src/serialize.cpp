#include "scenemem/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scenemem/errors.hpp"

namespace scenemem {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

std::string escape_dot(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string number(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

std::string save_memory(const MemoryGraph& memory) {
  json doc;
  doc["version"] = kFormatVersion;

  json categories = json::array();
  for (const auto& [id, cat] : memory.categories()) {
    if (cat.is_root()) continue;
    json c;
    c["id"] = id;
    c["score"] = cat.score;
    json restrictions = json::array();
    for (const auto& [rr, shoulder] : cat.restrictions) {
      restrictions.push_back({{"role", rr.role},
                              {"type", rr.type},
                              {"k", shoulder.k()},
                              {"a", shoulder.fuzziness()}});
    }
    c["restrictions"] = std::move(restrictions);
    categories.push_back(std::move(c));
  }
  doc["categories"] = std::move(categories);

  json edges = json::array();
  for (const auto& [key, degree] : memory.edges()) {
    edges.push_back(
        {{"child", key.first}, {"parent", key.second}, {"degree", degree}});
  }
  doc["edges"] = std::move(edges);

  return doc.dump(2) + "\n";
}

MemoryGraph load_memory(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("memory file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("categories")) {
    throw InputError("memory file must be an object with \"categories\"");
  }
  if (doc.contains("version") &&
      (!doc.at("version").is_number_integer() ||
       doc.at("version").get<int>() != kFormatVersion)) {
    throw InputError("unsupported memory file version");
  }

  MemoryGraph memory;
  for (const auto& c : doc.at("categories")) {
    if (!c.is_object() || !c.contains("id") || !c.contains("score") ||
        !c.contains("restrictions")) {
      throw InputError("category needs \"id\", \"score\" and \"restrictions\"");
    }
    Category cat;
    cat.id = c.at("id").get<std::string>();
    cat.score = c.at("score").get<double>();
    if (!(cat.score >= 0.0)) {
      throw InputError("category '" + cat.id + "' has a negative score");
    }
    if (memory.contains(cat.id)) {
      throw InputError("duplicate category id in memory file: " + cat.id);
    }
    for (const auto& r : c.at("restrictions")) {
      if (!r.is_object() || !r.contains("role") || !r.contains("type") ||
          !r.contains("k") || !r.contains("a")) {
        throw InputError("restriction needs \"role\", \"type\", \"k\" and \"a\"");
      }
      const double k = r.at("k").get<double>();
      const double a = r.at("a").get<double>();
      if (!(k >= 0.0) || !(a >= 0.0 && a <= 1.0)) {
        throw InputError("restriction of '" + cat.id + "' is out of range");
      }
      cat.restrictions.emplace(
          ReifiedRole{r.at("role").get<std::string>(),
                      r.at("type").get<std::string>()},
          LeftShoulder(k, a));
    }
    if (cat.restrictions.empty()) {
      throw InputError("category '" + cat.id + "' has no restrictions");
    }
    memory.add_category(std::move(cat));
  }

  // Stored edges are derivable; when present they must agree with the
  // recomputation or the file is corrupt.
  if (doc.contains("edges")) {
    std::map<MemoryGraph::EdgeKey, double> stated;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_object() || !e.contains("child") || !e.contains("parent") ||
          !e.contains("degree")) {
        throw InputError("edge needs \"child\", \"parent\" and \"degree\"");
      }
      stated[{e.at("child").get<std::string>(),
              e.at("parent").get<std::string>()}] = e.at("degree").get<double>();
    }
    if (stated != memory.edges()) {
      throw InputError(
          "stored edges do not match recomputed subsumption degrees");
    }
  }
  return memory;
}

MemoryGraph load_memory_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open memory file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_memory(buffer.str());
}

std::string export_dot(const MemoryGraph& memory) {
  const auto& edges = memory.edges();
  auto weight_one = [&edges](const std::string& child, const std::string& parent) {
    auto it = edges.find({child, parent});
    return it != edges.end() && it->second == 1.0;
  };
  auto equivalent = [&](const std::string& a, const std::string& b) {
    return weight_one(a, b) && weight_one(b, a);
  };
  // A weight-1 edge is redundant for display when a third, non-equivalent
  // category sits strictly between its endpoints.
  auto redundant = [&](const std::string& child, const std::string& parent) {
    for (const auto& [id, cat] : memory.categories()) {
      if (id == child || id == parent) continue;
      if (weight_one(child, id) && weight_one(id, parent) &&
          !equivalent(id, child) && !equivalent(id, parent)) {
        return true;
      }
    }
    return false;
  };

  std::ostringstream out;
  out << "digraph memory {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& [id, cat] : memory.categories()) {
    out << "  \"" << escape_dot(id) << "\" [label=\"" << escape_dot(id);
    if (cat.is_root()) {
      out << "\", shape=ellipse];\n";
      continue;
    }
    out << "\\nq=" << number(cat.score);
    for (const auto& [rr, shoulder] : cat.restrictions) {
      out << "\\n" << escape_dot(rr.display()) << " >= " << number(shoulder.k())
          << " (a=" << number(shoulder.fuzziness()) << ")";
    }
    out << "\"];\n";
  }
  for (const auto& [key, degree] : edges) {
    const auto& [child, parent] = key;
    if (degree == 1.0) {
      if (redundant(child, parent)) continue;
      out << "  \"" << escape_dot(child) << "\" -> \"" << escape_dot(parent)
          << "\";\n";
    } else {
      out << "  \"" << escape_dot(child) << "\" -> \"" << escape_dot(parent)
          << "\" [label=\"" << number(degree) << "\", style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace scenemem
