#include "fqid/library.hpp"

#include <cctype>
#include <charconv>

#include "fqid/error.hpp"

namespace fqid {

namespace {

std::string unit_name(int i, int j) { return "e" + std::to_string(i + 1) + std::to_string(j + 1); }

// Matrix-unit algebra over the positions in `units`: e_ij e_kl = [j == k] e_il,
// or the commutator of that product when `bracket` is set.
Algebra unit_algebra(const std::vector<std::pair<int, int>>& units, const FieldPtr& field, bool bracket,
                     std::string name) {
  const int dim = static_cast<int>(units.size());
  const Field& f = *field;
  auto index_of = [&](int i, int l) {
    for (int a = 0; a < dim; ++a) {
      if (units[a] == std::pair{i, l}) return a;
    }
    return -1;
  };
  StructureTable table(dim, std::vector<Vec>(dim, Vec(dim)));
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      const auto [i, j] = units[a];
      const auto [k, l] = units[b];
      if (j == k) {
        const int c = index_of(i, l);
        if (c >= 0) table[a][b][c] = f.add(table[a][b][c], f.one());
      }
      if (bracket && l == i) {
        const int c = index_of(k, j);
        if (c >= 0) table[a][b][c] = f.sub(table[a][b][c], f.one());
      }
    }
  }
  std::vector<std::string> names;
  for (const auto& [i, j] : units) names.push_back(unit_name(i, j));
  return Algebra::create(field, dim, table, bracket, std::move(name), std::move(names));
}

std::string q_suffix(const FieldPtr& field) { return std::to_string(field->q()); }

std::vector<long long> parse_params(std::string_view text) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc()) throw Error(ErrorKind::UnknownBuilder, "malformed parameter list '" + std::string(text) + "'");
    pos = static_cast<std::size_t>(ptr - text.data());
    out.push_back(v);
  }
  return out;
}

}  // namespace

Algebra matrix_algebra(int n, const FieldPtr& field) {
  std::vector<std::pair<int, int>> units;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) units.emplace_back(i, j);
  }
  return unit_algebra(units, field, false, "matrix(" + std::to_string(n) + "," + q_suffix(field) + ")");
}

Algebra upper_triangular(int n, const FieldPtr& field) {
  std::vector<std::pair<int, int>> units;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) units.emplace_back(i, j);
  }
  return unit_algebra(units, field, false, "upper_triangular(" + std::to_string(n) + "," + q_suffix(field) + ")");
}

Algebra strictly_upper_triangular_lie(int n, const FieldPtr& field) {
  std::vector<std::pair<int, int>> units;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) units.emplace_back(i, j);
  }
  return unit_algebra(units, field, true,
                      "strictly_upper_triangular_lie(" + std::to_string(n) + "," + q_suffix(field) + ")");
}

Algebra heisenberg(const FieldPtr& field) {
  const Field& f = *field;
  StructureTable table(3, std::vector<Vec>(3, Vec(3)));
  table[0][1][2] = f.one();
  table[1][0][2] = f.neg(f.one());
  return Algebra::create(field, 3, table, true, "heisenberg(" + q_suffix(field) + ")", {"b1", "b2", "b3"});
}

Algebra truncated(const FieldPtr& field, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "truncation order must be >= 1");
  const int dim = m - 1;
  StructureTable table(dim, std::vector<Vec>(dim, Vec(dim)));
  std::vector<std::string> names;
  for (int a = 0; a < dim; ++a) {
    names.push_back(a == 0 ? "t" : "t^" + std::to_string(a + 1));
    for (int b = 0; b < dim; ++b) {
      const int power = (a + 1) + (b + 1);
      if (power < m) table[a][b][power - 1] = field->one();
    }
  }
  return Algebra::create(field, dim, table, false, "truncated(" + q_suffix(field) + "," + std::to_string(m) + ")",
                         std::move(names));
}

Algebra field_as_algebra(const FieldPtr& field) {
  StructureTable table(1, std::vector<Vec>(1, Vec{field->one()}));
  return Algebra::create(field, 1, table, false, "field(" + q_suffix(field) + ")", {"1"});
}

Algebra builtin_algebra(std::string_view spec) {
  const auto open = spec.find('(');
  const auto close = spec.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw Error(ErrorKind::UnknownBuilder, "expected name(params), got '" + std::string(spec) + "'");
  }
  const std::string name(spec.substr(0, open));
  const auto params = parse_params(spec.substr(open + 1, close - open - 1));
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorKind::UnknownBuilder, name + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  auto field_of = [](long long q) {
    if (q < 2 || q > static_cast<long long>(Field::kMaxOrder)) {
      throw Error(ErrorKind::FieldTooLarge, "unsupported field order " + std::to_string(q));
    }
    return Field::of_order(static_cast<std::uint32_t>(q));
  };
  auto size_of = [](long long n) {
    if (n < 1 || n > 16) throw Error(ErrorKind::InvalidArgument, "matrix size out of range");
    return static_cast<int>(n);
  };
  if (name == "matrix") {
    need(2);
    return matrix_algebra(size_of(params[0]), field_of(params[1]));
  }
  if (name == "upper_triangular") {
    need(2);
    return upper_triangular(size_of(params[0]), field_of(params[1]));
  }
  if (name == "strictly_upper_triangular_lie") {
    need(2);
    return strictly_upper_triangular_lie(size_of(params[0]), field_of(params[1]));
  }
  if (name == "heisenberg") {
    need(1);
    return heisenberg(field_of(params[0]));
  }
  if (name == "truncated") {
    need(2);
    if (params[1] < 1 || params[1] > 64) throw Error(ErrorKind::InvalidArgument, "truncation order out of range");
    return truncated(field_of(params[0]), static_cast<int>(params[1]));
  }
  if (name == "field" || name == "field_as_algebra") {
    need(1);
    return field_as_algebra(field_of(params[0]));
  }
  throw Error(ErrorKind::UnknownBuilder, "unknown builder '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"matrix", "upper_triangular", "strictly_upper_triangular_lie", "heisenberg", "truncated",
          "field_as_algebra", "field"};
}

std::vector<std::string> library_specs() {
  return {"field(2)",
          "field(3)",
          "field(4)",
          "truncated(2,3)",
          "truncated(2,4)",
          "truncated(3,3)",
          "truncated(5,3)",
          "upper_triangular(2,2)",
          "upper_triangular(2,3)",
          "matrix(2,2)",
          "heisenberg(2)",
          "heisenberg(3)",
          "strictly_upper_triangular_lie(3,2)",
          "strictly_upper_triangular_lie(4,2)"};
}

}  // namespace fqid
