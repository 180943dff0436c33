#include "turankit/cli/family_file.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace turankit::cli {

namespace {

using nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational rational_field(const ordered_json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument(std::string("family file: ") + what + " must be a string like \"p/q\"");
}

SequenceSpec parse_sequence(const ordered_json& j, std::size_t default_first) {
  if (!j.is_object() || !j.contains("kind")) throw std::invalid_argument("family file: sequence needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "list") {
    std::vector<Rational> values;
    for (const auto& v : j.at("values")) values.push_back(rational_field(v, "list value"));
    if (values.empty()) throw std::invalid_argument("family file: empty list");
    const std::size_t first = j.contains("first_index") ? j.at("first_index").get<std::size_t>() : default_first;
    return SequenceSpec::list(std::move(values), first);
  }
  if (kind == "formula") {
    const std::string name = j.at("name").get<std::string>();
    if (name == "hermite-monic") return SequenceSpec::hermite_monic();
    if (name == "ultraspherical-a") {
      if (!j.contains("params") || !j.at("params").contains("lambda")) {
        throw std::invalid_argument("family file: ultraspherical-a needs params.lambda");
      }
      return SequenceSpec::ultraspherical(rational_field(j.at("params").at("lambda"), "lambda"));
    }
    throw std::invalid_argument("family file: unknown formula \"" + name + "\"");
  }
  throw std::invalid_argument("family file: unknown sequence kind \"" + kind + "\"");
}

ordered_json sequence_json(const SequenceSpec& s) {
  return std::visit(
      overloaded{
          [](const SequenceSpec::UltrasphericalA& u) {
            return ordered_json{{"kind", "formula"},
                                {"name", "ultraspherical-a"},
                                {"params", ordered_json{{"lambda", to_string(u.lambda)}}}};
          },
          [](const SequenceSpec::HermiteMonicA&) {
            return ordered_json{{"kind", "formula"}, {"name", "hermite-monic"}};
          },
          [](const SequenceSpec::ExplicitList& l) {
            ordered_json values = ordered_json::array();
            for (const Rational& v : l.values) values.push_back(to_string(v));
            return ordered_json{{"kind", "list"}, {"values", values}, {"first_index", l.first_index}};
          },
          [](const SequenceSpec::Formula& f) -> ordered_json {
            throw std::invalid_argument("cannot serialise user formula \"" + f.name + "\"");
          },
      },
      s.kind());
}

}  // namespace

FamilySpec parse_family_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("family file: ") + e.what());
  }
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "ultraspherical") return FamilySpec::ultraspherical(rational_field(j.at("lambda"), "lambda"));
    if (type == "symmetric-unit") return FamilySpec::symmetric_unit(parse_sequence(j.at("a"), 1));
    if (type == "monic-symmetric") return FamilySpec::monic_symmetric(parse_sequence(j.at("a"), 1));
    if (type == "general") {
      return FamilySpec::general(parse_sequence(j.at("a"), 1), parse_sequence(j.at("b"), 0),
                                 parse_sequence(j.at("c"), 0));
    }
    throw std::invalid_argument("family file: unknown type \"" + type + "\"");
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("family file: ") + e.what());
  }
}

FamilySpec read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_family_json(ss.str());
}

std::string family_to_json(const FamilySpec& family) {
  const ordered_json j = std::visit(
      overloaded{
          [](const FamilySpec::Ultraspherical& u) {
            return ordered_json{{"type", "ultraspherical"}, {"lambda", to_string(u.lambda)}};
          },
          [](const FamilySpec::SymmetricUnit& s) {
            return ordered_json{{"type", "symmetric-unit"}, {"a", sequence_json(s.a)}};
          },
          [](const FamilySpec::MonicSymmetric& m) {
            return ordered_json{{"type", "monic-symmetric"}, {"a", sequence_json(m.a)}};
          },
          [](const FamilySpec::GeneralThreeTerm& g) {
            return ordered_json{
                {"type", "general"}, {"a", sequence_json(g.a)}, {"b", sequence_json(g.b)}, {"c", sequence_json(g.c)}};
          },
      },
      family.variant());
  return j.dump(2) + "\n";
}

void write_family_file(const FamilySpec& family, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << family_to_json(family);
}

}  // namespace turankit::cli
