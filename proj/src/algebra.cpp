#include "fqid/algebra.hpp"

#include <cctype>

#include "fqid/error.hpp"

namespace fqid {

namespace {

std::string triple_string(int i, int j, int k) {
  return "(b" + std::to_string(i + 1) + ", b" + std::to_string(j + 1) + ", b" + std::to_string(k + 1) + ")";
}

}  // namespace

Algebra Algebra::create(FieldPtr field, int dim, const StructureTable& table, bool bracket, std::string name,
                        std::vector<std::string> basis_names) {
  if (dim < 0) throw Error(ErrorKind::ShapeMismatch, "negative dimension");
  if (dim > 0xFFFF) throw Error(ErrorKind::ShapeMismatch, "dimension too large");
  if (static_cast<int>(table.size()) != dim) throw Error(ErrorKind::ShapeMismatch, "table must have dim rows");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != dim) throw Error(ErrorKind::ShapeMismatch, "table rows must have dim entries");
    for (const auto& entry : row) {
      if (static_cast<int>(entry.size()) != dim) {
        throw Error(ErrorKind::ShapeMismatch, "table entries must have dim coordinates");
      }
      for (Scalar s : entry) {
        if (s.code >= field->q()) throw Error(ErrorKind::ShapeMismatch, "coordinate outside the field");
      }
    }
  }
  if (basis_names.empty()) {
    for (int i = 0; i < dim; ++i) basis_names.push_back("b" + std::to_string(i + 1));
  }
  if (static_cast<int>(basis_names.size()) != dim) throw Error(ErrorKind::ShapeMismatch, "basis_names length");

  Algebra a;
  a.field_ = std::move(field);
  a.dim_ = dim;
  a.bracket_ = bracket;
  a.name_ = std::move(name);
  a.basis_names_ = std::move(basis_names);
  a.offsets_.reserve(std::size_t(dim) * dim + 1);
  a.offsets_.push_back(0);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      for (int s = 0; s < dim; ++s) {
        if (!table[i][j][s].is_zero()) a.entries_.push_back({static_cast<std::uint16_t>(s), table[i][j][s]});
      }
      a.offsets_.push_back(static_cast<std::uint32_t>(a.entries_.size()));
    }
  }

  if (bracket) {
    const Field& f = *a.field_;
    for (int i = 0; i < dim; ++i) {
      if (!vec_is_zero(table[i][i])) {
        throw Error(ErrorKind::LieAxiomViolation, "antisymmetry: b" + std::to_string(i + 1) + "*b" +
                                                      std::to_string(i + 1) + " != 0");
      }
      for (int j = i + 1; j < dim; ++j) {
        if (!vec_is_zero(vec_add(f, table[i][j], table[j][i]))) {
          throw Error(ErrorKind::LieAxiomViolation, "antisymmetry: b" + std::to_string(i + 1) + "*b" +
                                                        std::to_string(j + 1) + " != -b" + std::to_string(j + 1) +
                                                        "*b" + std::to_string(i + 1));
        }
      }
    }
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        for (int k = 0; k < dim; ++k) {
          const Vec t1 = a.mul(table[i][j], a.basis(k));
          const Vec t2 = a.mul(table[j][k], a.basis(i));
          const Vec t3 = a.mul(table[k][i], a.basis(j));
          if (!vec_is_zero(vec_add(f, vec_add(f, t1, t2), t3))) {
            throw Error(ErrorKind::LieAxiomViolation, "jacobi: " + triple_string(i, j, k));
          }
        }
      }
    }
  }
  return a;
}

Vec Algebra::product(int i, int j) const {
  Vec out(dim_);
  const std::size_t cell = std::size_t(i) * dim_ + j;
  for (std::uint32_t e = offsets_[cell]; e < offsets_[cell + 1]; ++e) out[entries_[e].coord] = entries_[e].value;
  return out;
}

StructureTable Algebra::table() const {
  StructureTable t(dim_, std::vector<Vec>(dim_));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) t[i][j] = product(i, j);
  }
  return t;
}

Vec Algebra::mul(const Vec& u, const Vec& v) const {
  if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_) {
    throw Error(ErrorKind::DimensionMismatch, "operand length differs from algebra dimension");
  }
  Vec out(dim_);
  mul_into(u, v, out);
  return out;
}

Vec Algebra::basis(int i) const {
  Vec e(dim_);
  e[i] = field_->one();
  return e;
}

bool Algebra::is_associative() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      const Vec ij = product(i, j);
      for (int k = 0; k < dim_; ++k) {
        if (mul(ij, basis(k)) != mul(basis(i), product(j, k))) return false;
      }
    }
  }
  return true;
}

bool Algebra::is_commutative() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      if (product(i, j) != product(j, i)) return false;
    }
  }
  return true;
}

std::string Algebra::vector_string(const Vec& v) const {
  std::string out;
  for (int i = 0; i < dim_; ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (v[i] != field_->one()) {
      const std::string lit = field_->literal(v[i]);
      out += (lit.find('+') == std::string::npos ? lit : "(" + lit + ")") + "*";
    }
    out += basis_names_[i];
  }
  return out.empty() ? "0" : out;
}

Vec Algebra::parse_vector(std::string_view text) const {
  Vec out(dim_);
  const Field& f = *field_;
  // Split into signed terms at top-level '+' / '-'.
  std::vector<std::pair<bool, std::string>> terms;
  std::string cur;
  bool negative = false;
  int depth = 0;
  auto flush = [&] {
    std::string t;
    for (char c : cur) {
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    if (!t.empty()) terms.emplace_back(negative, t);
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      flush();
      negative = c == '-';
      continue;
    }
    cur += c;
  }
  flush();
  for (const auto& [neg, term] : terms) {
    std::string coeff_text;
    std::string name = term;
    const auto star = term.rfind('*');
    if (star != std::string::npos) {
      coeff_text = term.substr(0, star);
      name = term.substr(star + 1);
    }
    const auto it = std::find(basis_names_.begin(), basis_names_.end(), name);
    Scalar coeff = coeff_text.empty() ? f.one() : f.parse_literal(coeff_text);
    if (neg) coeff = f.neg(coeff);
    if (it == basis_names_.end()) {
      if (coeff_text.empty() && f.parse_literal(name).is_zero()) continue;  // "0"
      throw Error(ErrorKind::InvalidArgument, "unknown basis element '" + name + "'");
    }
    const auto idx = it - basis_names_.begin();
    out[idx] = f.add(out[idx], coeff);
  }
  return out;
}

// ---------------------------------------------------------------- ideals

bool is_two_sided_ideal(const Algebra& algebra, const Subspace& space) {
  if (space.ambient() != algebra.dim()) return false;
  for (const auto& u : space.rows()) {
    for (int i = 0; i < algebra.dim(); ++i) {
      const Vec b = algebra.basis(i);
      if (!space.contains(algebra.mul(u, b)) || !space.contains(algebra.mul(b, u))) return false;
    }
  }
  return true;
}

Ideal Ideal::from_subspace(const Algebra& algebra, Subspace space) {
  if (!is_two_sided_ideal(algebra, space)) throw Error(ErrorKind::NotAnIdeal, "subspace is not a two-sided ideal");
  return Ideal(std::move(space));
}

Ideal ideal_generated(const Algebra& algebra, std::span<const Vec> gens) {
  Subspace s = Subspace::span(algebra.field(), algebra.dim(), gens);
  bool changed = true;
  while (changed) {
    changed = false;
    const auto rows = s.rows();
    for (const auto& u : rows) {
      for (int i = 0; i < algebra.dim(); ++i) {
        const Vec b = algebra.basis(i);
        changed |= s.insert(algebra.mul(u, b));
        changed |= s.insert(algebra.mul(b, u));
      }
    }
  }
  return Ideal(std::move(s));
}

std::vector<Ideal> enumerate_ideals(const Algebra& algebra, std::uint64_t cap) {
  const std::uint64_t count = count_subspaces(algebra.field()->q(), algebra.dim());
  if (count > cap) {
    throw Error(ErrorKind::SearchSpaceTooLarge,
                std::to_string(count) + " subspaces exceed the cap of " + std::to_string(cap));
  }
  std::vector<Ideal> out;
  for (auto& s : enumerate_subspaces(algebra.field(), algebra.dim())) {
    if (is_two_sided_ideal(algebra, s)) out.push_back(Ideal(std::move(s)));
  }
  return out;
}

Vec Projection::apply(const Vec& v) const {
  const Vec r = kernel_.reduce(v);
  Vec out(columns_.size());
  for (std::size_t a = 0; a < columns_.size(); ++a) out[a] = r[columns_[a]];
  return out;
}

Vec Projection::lift(const Vec& w) const {
  Vec out(kernel_.ambient());
  for (std::size_t a = 0; a < columns_.size(); ++a) out[columns_[a]] = w[a];
  return out;
}

Vec Inclusion::apply(const Field& field, const Vec& coords) const {
  Vec out(ambient_);
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    if (coords[a].is_zero()) continue;
    out = vec_add(field, out, vec_scale(field, coords[a], rows_[a]));
  }
  return out;
}

Quotient quotient(const Algebra& algebra, const Ideal& ideal) {
  if (!is_two_sided_ideal(algebra, ideal.space())) throw Error(ErrorKind::NotAnIdeal, "quotient by a non-ideal");
  Projection proj(ideal.space());
  const auto& cols = proj.columns();
  const int qdim = static_cast<int>(cols.size());
  StructureTable table(qdim, std::vector<Vec>(qdim));
  std::vector<std::string> names;
  for (int a = 0; a < qdim; ++a) {
    names.push_back(algebra.basis_names()[cols[a]]);
    for (int b = 0; b < qdim; ++b) table[a][b] = proj.apply(algebra.product(cols[a], cols[b]));
  }
  std::string name = algebra.name().empty() ? "A/I" : algebra.name() + "/I";
  return {Algebra::create(algebra.field(), qdim, table, algebra.is_bracket(), std::move(name), std::move(names)),
          std::move(proj)};
}

Restriction restrict_to(const Algebra& algebra, const Ideal& ideal) {
  const Subspace& s = ideal.space();
  if (!is_two_sided_ideal(algebra, s)) throw Error(ErrorKind::NotAnIdeal, "restriction to a non-ideal");
  const int r = s.rank();
  StructureTable table(r, std::vector<Vec>(r));
  std::vector<std::string> names;
  for (int a = 0; a < r; ++a) {
    names.push_back("u" + std::to_string(a + 1));
    for (int b = 0; b < r; ++b) table[a][b] = s.coordinates(algebra.mul(s.rows()[a], s.rows()[b]));
  }
  std::string name = algebra.name().empty() ? "I" : "I<" + algebra.name() + ">";
  return {Algebra::create(algebra.field(), r, table, algebra.is_bracket(), std::move(name), std::move(names)),
          Inclusion(s.rows(), algebra.dim())};
}

std::optional<int> nilpotency_index(const Algebra& algebra) {
  std::vector<Subspace> powers;  // powers[m-1] = S_m
  powers.push_back(Subspace::whole(algebra.field(), algebra.dim()));
  if (powers.back().rank() == 0) return 1;
  for (int m = 2;; ++m) {
    Subspace next(algebra.field(), algebra.dim());
    for (int i = 1; i < m; ++i) {
      for (const auto& u : powers[i - 1].rows()) {
        for (const auto& v : powers[m - i - 1].rows()) next.insert(algebra.mul(u, v));
      }
    }
    if (next.rank() == 0) return m;
    if (next == powers.back()) return std::nullopt;
    powers.push_back(std::move(next));
  }
}

}  // namespace fqid
