#include "params.hpp"

#include <json.hpp>

#include "error.hpp"
#include "text.hpp"

namespace pw {

void validate(const StiffenedGasParams& g, bool allow_nonpositive_pi) {
  if (!(g.gamma > 1.0)) fail(errc::domain, "gamma must exceed 1, got " + fmt17(g.gamma));
  if (!(g.C > 0.0)) fail(errc::domain, "C must be positive, got " + fmt17(g.C));
  if (!allow_nonpositive_pi && !(g.pi >= 0.0))
    fail(errc::domain, "pi must be nonnegative, got " + fmt17(g.pi));
  if (g.pi != g.pi || g.q != g.q || g.q_prime != g.q_prime)
    fail(errc::domain, "parameter set contains NaN");
}

StiffenedGasParams table1_vapor() { return {1.43, 0.0, 1040.0, 2.03e6, -23.0e3}; }
StiffenedGasParams table1_liquid() { return {2.35, 1.0e9, 1816.0, -1167.0e3, 0.0}; }

StiffenedGasParams preset(const std::string& name) {
  if (name == "table1-vapor") return table1_vapor();
  if (name == "table1-liquid") return table1_liquid();
  fail(errc::invalid, "unknown parameter preset '" + name + "'");
}

namespace {

StiffenedGasParams from_object(const nlohmann::json& obj, const std::string& context) {
  if (!obj.is_object()) fail(errc::parse, context + ": expected a JSON object");
  for (const char* key : {"gamma", "pi", "C", "q", "q_prime"})
    if (!obj.contains(key) || !obj.at(key).is_number())
      fail(errc::parse, context + ": missing or non-numeric key '" + std::string(key) + "'");
  StiffenedGasParams g{obj.at("gamma").get<double>(), obj.at("pi").get<double>(),
                       obj.at("C").get<double>(), obj.at("q").get<double>(),
                       obj.at("q_prime").get<double>()};
  validate(g);
  return g;
}

nlohmann::json parse_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(errc::parse, "malformed JSON parameter document");
  return doc;
}

}  // namespace

StiffenedGasParams params_from_json(const std::string& text) {
  return from_object(parse_json(text), "parameters");
}

std::string params_to_json(const StiffenedGasParams& g) {
  return std::string("{\"gamma\":") + fmt17(g.gamma) + ",\"pi\":" + fmt17(g.pi) +
         ",\"C\":" + fmt17(g.C) + ",\"q\":" + fmt17(g.q) + ",\"q_prime\":" + fmt17(g.q_prime) +
         "}";
}

ParamsPair params_pair_from_json(const std::string& text) {
  nlohmann::json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("vapor") || !doc.contains("liquid"))
    fail(errc::parse, "parameter pair document needs keys 'vapor' and 'liquid'");
  return {from_object(doc.at("vapor"), "vapor"), from_object(doc.at("liquid"), "liquid")};
}

}  // namespace pw
