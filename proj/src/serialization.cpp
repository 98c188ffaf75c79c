#include "ramanujan/serialization.hpp"

#include <cstdint>
#include <cstdio>

#include "ramanujan/errors.hpp"

namespace ramanujan {

using nlohmann::json;

json poly_to_json(const UniPoly<Rational>& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

UniPoly<Rational> poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (c.is_string()) {
      coeffs.push_back(parse_rational(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else {
      throw std::invalid_argument("polynomial coefficients must be strings or integers");
    }
  }
  return UniPoly<Rational>(std::move(coeffs));
}

namespace {

std::vector<std::size_t> partners_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidNode(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long>() < 1) {
      throw InvalidNode(std::string(what) + " entries must be positive integers");
    }
    out.push_back(static_cast<std::size_t>(v.get<long>() - 1));
  }
  return out;
}

json partners_to_json(const std::vector<std::size_t>& partners) {
  json out = json::array();
  for (auto p : partners) out.push_back(p + 1);
  return out;
}

}  // namespace

json node_to_json(const NodeState& node) {
  json complete = json::array();
  for (const auto& m : node.complete) complete.push_back(partners_to_json(m));
  return {{"complete", complete},
          {"partial", node.partial ? partners_to_json(*node.partial) : json::array()}};
}

NodeState node_from_json(const json& j, const Params& params) {
  if (!j.is_object()) throw InvalidNode("node must be a JSON object");
  NodeState node;
  if (j.contains("complete")) {
    const auto& complete = j.at("complete");
    if (!complete.is_array()) throw InvalidNode("\"complete\" must be an array");
    for (const auto& m : complete) node.complete.push_back(partners_from_json(m, "matching"));
  }
  if (j.contains("partial") && !j.at("partial").is_null()) {
    auto prefix = partners_from_json(j.at("partial"), "partial");
    if (!prefix.empty()) node.partial = std::move(prefix);
  }
  node.validate(params);
  return node;
}

json multigraph_to_json(const Multigraph& g) {
  return {{"n", g.params.n}, {"d", g.params.d}, {"multiplicity", g.multiplicity}};
}

Multigraph multigraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("multiplicity")) {
    throw std::invalid_argument("graph JSON needs \"n\", \"d\" and \"multiplicity\"");
  }
  try {
    Multigraph g;
    g.params = Params{j.at("n").get<unsigned>(), j.at("d").get<unsigned>()};
    g.params.validate();
    g.multiplicity = j.at("multiplicity").get<std::vector<std::vector<unsigned>>>();
    return g;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
}

json certificate_to_json(const Certificate& cert) {
  json shifted = json::array();
  for (const auto& c : cert.shifted.coefficients()) {
    shifted.push_back({{"a", to_string(c.a())}, {"b", to_string(c.b())}});
  }
  return {{"n", cert.graph.params.n},
          {"d", cert.graph.params.d},
          {"q", cert.bound_q},
          {"adjacency_charpoly", poly_to_json(cert.adjacency_charpoly)},
          {"nontrivial_charpoly",
           cert.nontrivial_poly ? poly_to_json(*cert.nontrivial_poly) : json(nullptr)},
          {"shifted_coeffs", shifted},
          {"passed", cert.passed},
          {"reason", cert.reason}};
}

json ctensor_to_json(const CTensor& ctensor) {
  json values = json::array();
  for (std::size_t k = 0; k <= ctensor.m(); ++k) {
    json by_p = json::array();
    for (std::size_t p = 0; p <= ctensor.lhat(); ++p) {
      json by_q = json::array();
      for (std::size_t q = 0; q <= ctensor.lhat(); ++q) by_q.push_back(to_string(ctensor.at(k, p, q)));
      by_p.push_back(std::move(by_q));
    }
    values.push_back(std::move(by_p));
  }
  return {{"m", ctensor.m()}, {"lhat", ctensor.lhat()}, {"values", values}};
}

std::string poly_hash(const UniPoly<Rational>& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& c : p.coefficients()) {
    feed(to_string(c));
    feed(",");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json transcript_to_json(const WalkResult& walk, const std::optional<Certificate>& certificate) {
  json stages = json::array();
  for (const auto& stage : walk.stages) {
    json kids = json::array();
    for (const auto& child : stage.children) {
      kids.push_back({{"node", node_to_json(child.node)},
                      {"poly_hash", poly_hash(child.poly)},
                      {"passed", child.passed}});
    }
    stages.push_back({{"node", node_to_json(stage.node)},
                      {"poly_hash", poly_hash(stage.poly)},
                      {"children", kids},
                      {"chosen", stage.chosen ? json(*stage.chosen) : json(nullptr)},
                      {"seconds", stage.seconds}});
  }
  return {{"params", {{"n", walk.params.n}, {"d", walk.params.d}}},
          {"canonical_first_matching", walk.canonical_first_matching},
          {"stages", stages},
          {"leaf", walk.finished ? node_to_json(walk.leaf) : json(nullptr)},
          {"timing", {{"total_seconds", walk.seconds}}},
          {"certificate", certificate ? certificate_to_json(*certificate) : json(nullptr)}};
}

}  // namespace ramanujan
