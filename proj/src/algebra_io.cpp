#include "fqid/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include "fqid/error.hpp"
#include "fqid/library.hpp"

namespace fqid {

namespace {

Scalar scalar_from_json(const Field& f, const nlohmann::json& j) {
  if (j.is_string()) return f.parse_literal(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  throw Error(ErrorKind::ShapeMismatch, "table entries must be field literal strings or integers");
}

}  // namespace

Algebra algebra_from_json(const nlohmann::json& doc) {
  try {
    const auto& fj = doc.at("field");
    std::optional<std::vector<int>> modulus;
    if (fj.contains("modulus") && !fj.at("modulus").is_null()) modulus = fj.at("modulus").get<std::vector<int>>();
    const FieldPtr field = Field::create(fj.at("p").get<int>(), fj.value("k", 1), modulus);
    const int dim = doc.at("dim").get<int>();
    const bool bracket = doc.value("bracket", false);
    std::vector<std::string> names;
    if (doc.contains("basis_names")) names = doc.at("basis_names").get<std::vector<std::string>>();
    const auto& tj = doc.at("table");
    if (!tj.is_array() || static_cast<int>(tj.size()) != dim) {
      throw Error(ErrorKind::ShapeMismatch, "table must have dim rows");
    }
    StructureTable table(dim, std::vector<Vec>(dim));
    for (int i = 0; i < dim; ++i) {
      if (!tj[i].is_array() || static_cast<int>(tj[i].size()) != dim) {
        throw Error(ErrorKind::ShapeMismatch, "table rows must have dim entries");
      }
      for (int j = 0; j < dim; ++j) {
        const auto& cell = tj[i][j];
        if (!cell.is_array() || static_cast<int>(cell.size()) != dim) {
          throw Error(ErrorKind::ShapeMismatch, "table entries must have dim coordinates");
        }
        for (const auto& c : cell) table[i][j].push_back(scalar_from_json(*field, c));
      }
    }
    return Algebra::create(field, dim, table, bracket, doc.value("name", std::string{}), std::move(names));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ShapeMismatch, std::string("malformed algebra file: ") + e.what());
  }
}

nlohmann::json algebra_to_json(const Algebra& algebra) {
  const Field& f = *algebra.field();
  nlohmann::json fj = {{"p", f.p()}, {"k", f.k()}};
  if (f.k() > 1) fj["modulus"] = f.modulus();
  nlohmann::json table = nlohmann::json::array();
  for (int i = 0; i < algebra.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < algebra.dim(); ++j) {
      nlohmann::json cell = nlohmann::json::array();
      for (Scalar s : algebra.product(i, j)) cell.push_back(f.literal(s));
      row.push_back(std::move(cell));
    }
    table.push_back(std::move(row));
  }
  nlohmann::json doc = {{"field", fj},
                        {"dim", algebra.dim()},
                        {"bracket", algebra.is_bracket()},
                        {"basis_names", algebra.basis_names()},
                        {"table", table}};
  if (!algebra.name().empty()) doc["name"] = algebra.name();
  return doc;
}

Algebra load_algebra(std::string_view source) {
  constexpr std::string_view kBuiltin = "builtin:";
  if (source.substr(0, kBuiltin.size()) == kBuiltin) return builtin_algebra(source.substr(kBuiltin.size()));
  std::ifstream in{std::string(source)};
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open algebra file '" + std::string(source) + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ShapeMismatch, std::string("malformed algebra file: ") + e.what());
  }
  return algebra_from_json(doc);
}

}  // namespace fqid
