#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <thread>
#include <vector>

#include "fqid/gf.hpp"

namespace fqid {

/// base^exp, saturating at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

/// Walks F_q^len in canonical order: lexicographic with coordinate 0 most
/// significant, so the last coordinate varies fastest.
class Odometer {
 public:
  Odometer(std::uint32_t q, std::size_t len, std::uint64_t start = 0) : q_(q), digits_(len) {
    for (std::size_t i = len; i-- > 0;) {
      digits_[i].code = static_cast<std::uint16_t>(start % q_);
      start /= q_;
    }
  }

  std::span<const Scalar> digits() const { return digits_; }

  /// Advances one step; returns the number of trailing coordinates that
  /// changed (len + 1 on wrap-around).
  std::size_t next() {
    std::size_t changed = 0;
    for (std::size_t i = digits_.size(); i-- > 0;) {
      ++changed;
      if (++digits_[i].code < q_) return changed;
      digits_[i].code = 0;
    }
    return changed + 1;
  }

 private:
  std::uint32_t q_;
  std::vector<Scalar> digits_;
};

/// Splits [0, total) into contiguous chunks, one per worker, and adds up
/// fn(begin, end). The sum does not depend on the worker count.
template <class Fn>
std::uint64_t parallel_sum(std::uint64_t total, int workers, Fn fn) {
  const std::uint64_t w = std::clamp<std::uint64_t>(workers < 1 ? 1 : workers, 1, std::max<std::uint64_t>(total, 1));
  if (w == 1) return fn(std::uint64_t{0}, total);
  std::vector<std::uint64_t> partial(w, 0);
  std::vector<std::jthread> pool;
  pool.reserve(w);
  for (std::uint64_t t = 0; t < w; ++t) {
    const std::uint64_t begin = total / w * t + std::min(t, total % w);
    const std::uint64_t end = begin + total / w + (t < total % w ? 1 : 0);
    pool.emplace_back([&, t, begin, end] { partial[t] = fn(begin, end); });
  }
  pool.clear();
  std::uint64_t sum = 0;
  for (auto v : partial) sum += v;
  return sum;
}

}  // namespace fqid
