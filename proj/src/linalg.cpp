#include "fqid/linalg.hpp"

#include <algorithm>
#include <limits>

#include "fqid/error.hpp"

namespace fqid {

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vec vec_scale(const Field& f, Scalar s, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(s, a[i]);
  return out;
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](Scalar s) { return s.is_zero(); });
}

Subspace::Subspace(FieldPtr field, int ambient) : field_(std::move(field)), ambient_(ambient) {}

Subspace Subspace::span(FieldPtr field, int ambient, std::span<const Vec> vectors) {
  Subspace s(std::move(field), ambient);
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != ambient) throw Error(ErrorKind::DimensionMismatch, "vector length");
    s.insert(v);
  }
  return s;
}

Subspace Subspace::whole(FieldPtr field, int ambient) {
  Subspace s(field, ambient);
  for (int i = 0; i < ambient; ++i) {
    Vec e(ambient);
    e[i] = field->one();
    s.rows_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

std::vector<int> Subspace::free_columns() const {
  std::vector<int> out;
  std::size_t p = 0;
  for (int c = 0; c < ambient_; ++c) {
    if (p < pivots_.size() && pivots_[p] == c) {
      ++p;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length");
  Vec r = v;
  const Field& f = *field_;
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    const Scalar c = r[pivots_[a]];
    if (c.is_zero()) continue;
    const Vec& row = rows_[a];
    for (int j = pivots_[a]; j < ambient_; ++j) r[j] = f.sub(r[j], f.mul(c, row[j]));
  }
  return r;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vec& r) { return contains(r); });
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec out(rows_.size());
  for (std::size_t a = 0; a < rows_.size(); ++a) out[a] = v[pivots_[a]];
  return out;
}

bool Subspace::insert(const Vec& v) {
  Vec r = reduce(v);
  int pivot = -1;
  for (int j = 0; j < ambient_; ++j) {
    if (!r[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  const Field& f = *field_;
  r = vec_scale(f, f.inv(r[pivot]), r);
  // Clear the new pivot column from existing rows.
  for (auto& row : rows_) {
    const Scalar c = row[pivot];
    if (c.is_zero()) continue;
    for (int j = pivot; j < ambient_; ++j) row[j] = f.sub(row[j], f.mul(c, r[j]));
  }
  const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto idx = at - pivots_.begin();
  pivots_.insert(at, pivot);
  rows_.insert(rows_.begin() + idx, std::move(r));
  return true;
}

std::vector<std::uint16_t> Subspace::key() const {
  std::vector<std::uint16_t> out;
  out.reserve(rows_.size() * static_cast<std::size_t>(ambient_));
  for (const auto& row : rows_) {
    for (Scalar s : row) out.push_back(s.code);
  }
  return out;
}

std::uint64_t count_subspaces(std::uint32_t q, int n) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // Gaussian binomials via the recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<unsigned __int128> row{1};
  const unsigned __int128 cap = kMax;
  for (int m = 1; m <= n; ++m) {
    std::vector<unsigned __int128> next(m + 1, 0);
    unsigned __int128 qk = 1;
    for (int k = 0; k <= m; ++k) {
      unsigned __int128 v = 0;
      if (k >= 1) v += row[k - 1];
      if (k < m) v += qk * row[k];
      next[k] = v > cap ? cap : v;
      if (qk < cap) qk *= q;
      if (qk > cap) qk = cap;
    }
    row = std::move(next);
  }
  unsigned __int128 total = 0;
  for (auto v : row) total += v;
  return total > cap ? kMax : static_cast<std::uint64_t>(total);
}

std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, int n) {
  const Field& f = *field;
  const std::uint32_t q = f.q();
  std::vector<Subspace> out;
  // Rank descending gives codimension ascending.
  for (int r = n; r >= 0; --r) {
    std::vector<Subspace> level;
    std::vector<int> pivots(r);
    for (int i = 0; i < r; ++i) pivots[i] = i;
    for (;;) {
      // Free slots: (row, column) with column > pivot and column not a pivot.
      std::vector<std::pair<int, int>> slots;
      for (int a = 0; a < r; ++a) {
        for (int c = pivots[a] + 1; c < n; ++c) {
          if (!std::binary_search(pivots.begin(), pivots.end(), c)) slots.emplace_back(a, c);
        }
      }
      std::vector<std::uint32_t> digits(slots.size(), 0);
      for (;;) {
        Subspace s(field, n);
        s.rows_.assign(r, Vec(n));
        s.pivots_ = pivots;
        for (int a = 0; a < r; ++a) s.rows_[a][pivots[a]] = f.one();
        for (std::size_t i = 0; i < slots.size(); ++i) {
          s.rows_[slots[i].first][slots[i].second] = Scalar{static_cast<std::uint16_t>(digits[i])};
        }
        level.push_back(std::move(s));
        bool carry = true;
        for (std::size_t i = slots.size(); carry && i-- > 0;) {
          if (++digits[i] < q) {
            carry = false;
          } else {
            digits[i] = 0;
          }
        }
        if (carry) break;
      }
      // Next pivot combination.
      int i = r - 1;
      while (i >= 0 && pivots[i] == n - r + i) --i;
      if (i < 0) break;
      ++pivots[i];
      for (int j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(level.begin(), level.end(), [](const Subspace& a, const Subspace& b) { return a.key() < b.key(); });
    for (auto& s : level) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace fqid
