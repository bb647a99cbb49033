#include "mbent/qstate.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mbent/errors.hpp"

namespace mbent {

using nlohmann::json;

namespace {

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + " lacks \"" + key + "\"");
  return *it;
}

int non_negative_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + " must be an integer");
  const auto v = value.get<long long>();
  if (v < 0 || v > std::numeric_limits<int>::max())
    throw ParseError(where + " must be a non-negative 32-bit integer");
  return static_cast<int>(v);
}

double number(const json& value, const std::string& where) {
  if (!value.is_number()) throw ParseError(where + " must be a number");
  return value.get<double>();
}

}  // namespace

LoadedState encode_state_from_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }

  const json& version = member(doc, "version", "document");
  if (!version.is_number_integer() || version.get<long long>() != 1)
    throw ParseError("unsupported version, expected 1");

  const json& kinds_json = member(doc, "kinds", "document");
  if (!kinds_json.is_array() || kinds_json.empty())
    throw ParseError("\"kinds\" must be a non-empty array");

  std::vector<KindSpec> kinds;
  for (std::size_t i = 0; i < kinds_json.size(); ++i) {
    const std::string where = "kinds[" + std::to_string(i) + "]";
    const json& name = member(kinds_json[i], "name", where);
    if (!name.is_string()) throw ParseError(where + ".name must be a string");
    const json& basis = member(kinds_json[i], "basis", where);
    if (!basis.is_array()) throw ParseError(where + ".basis must be an array");
    KindSpec kind{name.get<std::string>(), {}};
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::string bw = where + ".basis[" + std::to_string(b) + "]";
      kind.basis.push_back({non_negative_int(member(basis[b], "n", bw), bw + ".n"),
                            non_negative_int(member(basis[b], "sigma", bw), bw + ".sigma")});
    }
    kinds.push_back(std::move(kind));
  }

  std::optional<int> total;
  const json& total_json = member(doc, "total_particles", "document");
  if (!total_json.is_null()) total = non_negative_int(total_json, "total_particles");

  auto system = std::make_shared<const SystemSpec>(std::move(kinds), total);

  const json& amps_json = member(doc, "amplitudes", "document");
  if (!amps_json.is_array()) throw ParseError("\"amplitudes\" must be an array");
  AmplitudeMap amps;
  for (std::size_t a = 0; a < amps_json.size(); ++a) {
    const std::string where = "amplitudes[" + std::to_string(a) + "]";
    const json& index_json = member(amps_json[a], "index", where);
    if (!index_json.is_array()) throw ParseError(where + ".index must be an array");
    if (index_json.size() != system->num_kinds())
      throw ParseError(where + ".index must have one entry per kind");
    CompositeIndex index;
    for (std::size_t k = 0; k < index_json.size(); ++k)
      index.push_back(static_cast<std::size_t>(
          non_negative_int(index_json[k], where + ".index[" + std::to_string(k) + "]")));
    const Complex amp{number(member(amps_json[a], "re", where), where + ".re"),
                      number(member(amps_json[a], "im", where), where + ".im")};
    if (!amps.emplace(std::move(index), amp).second) throw ParseError(where + " repeats an index");
  }

  PureState raw(system, amps);
  const bool renormalized = !raw.is_normalized();
  return {normalize(raw), renormalized};
}

LoadedState load_qstate(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return encode_state_from_file(buf.str());
}

std::string write_qstate(const PureState& state) {
  json kinds = json::array();
  for (const auto& kind : state.system().kinds()) {
    json basis = json::array();
    for (const auto& b : kind.basis) basis.push_back({{"n", b.occupation}, {"sigma", b.internal_label}});
    kinds.push_back({{"name", kind.name}, {"basis", std::move(basis)}});
  }
  json amps = json::array();
  for (const auto& [index, amp] : state.amplitudes())
    amps.push_back({{"index", index}, {"re", amp.real()}, {"im", amp.imag()}});

  json doc;
  doc["version"] = 1;
  doc["kinds"] = std::move(kinds);
  doc["total_particles"] = state.system().total_particles()
                               ? json(*state.system().total_particles())
                               : json(nullptr);
  doc["amplitudes"] = std::move(amps);
  return doc.dump(2) + "\n";
}

}  // namespace mbent
