#include "gabidulin/specfile.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include "json.hpp"

namespace gabidulin {
namespace {

std::uint64_t get_uint(const nlohmann::json& j, const char* key) {
  if (!j.contains(key))
    throw ParseError(std::string("spec file missing key \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw ParseError(std::string("spec key \"") + key +
                     "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

}  // namespace

CodeSpec parse_code_spec(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("spec file must be a JSON object");

  const auto q = get_uint(j, "q");
  const auto m = get_uint(j, "m");
  const auto n = get_uint(j, "n");
  const auto k = get_uint(j, "k");
  if (q > 0xffffffffull || m > 64)
    throw InvariantError("field parameters out of range");

  std::shared_ptr<const Field> field;
  if (j.contains("modulus")) {
    const auto& mod = j.at("modulus");
    if (!mod.is_array()) throw ParseError("modulus must be an array");
    std::vector<unsigned> coeffs;
    for (const auto& c : mod) {
      if (!c.is_number_integer() || c.get<std::int64_t>() < 0)
        throw ParseError("modulus coefficients must be non-negative integers");
      coeffs.push_back(c.get<unsigned>());
    }
    field = std::make_shared<const Field>(static_cast<unsigned>(q),
                                          static_cast<unsigned>(m),
                                          std::move(coeffs));
  } else {
    field = std::make_shared<const Field>(static_cast<unsigned>(q),
                                          static_cast<unsigned>(m));
  }

  if (!j.contains("generators") || !j.at("generators").is_array())
    throw ParseError("spec file needs a \"generators\" array");
  const auto& gens = j.at("generators");
  if (gens.size() != n)
    throw ParseError("expected exactly n generator entries");
  std::vector<Element> generators;
  for (const auto& g : gens) {
    if (!g.is_number_integer() || g.get<std::int64_t>() < 0)
      throw ParseError("generators must be non-negative integers");
    generators.push_back(field->element(g.get<std::uint64_t>()));
  }

  return CodeSpec(std::move(field), n, k, std::move(generators));
}

CodeSpec load_code_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code_spec(buf.str());
}

std::string code_spec_to_json(const CodeSpec& spec) {
  nlohmann::json j;
  j["q"] = spec.field().q();
  j["m"] = spec.field().m();
  j["modulus"] = spec.field().modulus();
  j["n"] = spec.n();
  j["k"] = spec.k();
  std::vector<std::uint64_t> gens;
  for (Element g : spec.generators()) gens.push_back(g.code);
  j["generators"] = gens;
  return j.dump(2);
}

}  // namespace gabidulin
