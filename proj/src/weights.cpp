#include "weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fanohyp::weights {

Partition::Partition(std::vector<Entry> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    if (parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  if (!parts_.empty() && parts_.back() < 0)
    throw std::invalid_argument("partition parts must be non-negative");
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Entry Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), Entry{0});
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition conjugate(const Partition& p) {
  std::vector<Entry> out;
  for (Entry col = 1; col <= p.part(0); ++col) {
    Entry height = 0;
    while (height < static_cast<Entry>(p.rows()) &&
           p.part(static_cast<std::size_t>(height)) >= col)
      ++height;
    out.push_back(height);
  }
  return Partition(std::move(out));
}

Weight rho(int n) {
  Weight r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = n - 1 - i;
  return r;
}

Weight dotted_step(const Weight& alpha, std::size_t i) {
  if (i + 1 >= alpha.size())
    throw std::out_of_range("dotted_step position out of range");
  Weight out = alpha;
  out[i] = alpha[i + 1] - 1;
  out[i + 1] = alpha[i] + 1;
  return out;
}

namespace {

// Number of pairs i < j with v[i] < v[j], i.e. the length of the permutation
// sorting v into strictly decreasing order. Merge count keeps this exact and
// O(n log n), though n never exceeds a dozen here.
long long count_inversions(std::vector<Entry> v) {
  std::vector<Entry> tmp(v.size());
  long long count = 0;
  auto rec = [&](auto&& self, std::size_t lo, std::size_t hi) -> void {
    if (hi - lo <= 1) return;
    std::size_t mid = lo + (hi - lo) / 2;
    self(self, lo, mid);
    self(self, mid, hi);
    std::size_t a = lo, b = mid, k = lo;
    while (a < mid && b < hi) {
      if (v[a] >= v[b]) {
        tmp[k++] = v[a++];
      } else {
        // v[b] is larger than everything left in [a, mid)
        count += static_cast<long long>(mid - a);
        tmp[k++] = v[b++];
      }
    }
    while (a < mid) tmp[k++] = v[a++];
    while (b < hi) tmp[k++] = v[b++];
    std::copy(tmp.begin() + static_cast<long>(lo),
              tmp.begin() + static_cast<long>(hi),
              v.begin() + static_cast<long>(lo));
  };
  rec(rec, 0, v.size());
  return count;
}

}  // namespace

DottedNormalization normalize(const Weight& alpha) {
  const int n = static_cast<int>(alpha.size());
  Weight v = alpha;
  const Weight r = rho(n);
  for (int i = 0; i < n; ++i)
    v[static_cast<std::size_t>(i)] += r[static_cast<std::size_t>(i)];

  Weight sorted = v;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1]) return {};

  DottedNormalization out;
  out.status = DottedNormalization::Status::Regular;
  out.length = static_cast<int>(count_inversions(v));
  out.dominant = sorted;
  for (int i = 0; i < n; ++i)
    out.dominant[static_cast<std::size_t>(i)] -= r[static_cast<std::size_t>(i)];
  return out;
}

Int weyl_dim(const Weight& lambda, int n) {
  if (n < 0) throw std::invalid_argument("weyl_dim: n must be non-negative");
  Weight l = lambda;
  for (std::size_t i = 0; i + 1 < l.size(); ++i)
    if (l[i] < l[i + 1])
      throw std::invalid_argument("weyl_dim: weight not weakly decreasing");
  if (l.size() > static_cast<std::size_t>(n)) {
    // Extra rows: harmless if empty, kill the module if positive. A negative
    // tail has no GL(n) meaning for a shorter weight.
    for (std::size_t i = static_cast<std::size_t>(n); i < l.size(); ++i) {
      if (l[i] > 0) return 0;
      if (l[i] < 0)
        throw std::invalid_argument("weyl_dim: negative entry beyond rank");
    }
    l.resize(static_cast<std::size_t>(n));
  }
  if (!l.empty() && l.back() < 0 && l.size() < static_cast<std::size_t>(n))
    throw std::invalid_argument(
        "weyl_dim: zero-padding a weight with negative tail");
  l.resize(static_cast<std::size_t>(n), 0);

  Int num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= Int(l[static_cast<std::size_t>(i)] -
                 l[static_cast<std::size_t>(j)] + j - i);
      den *= Int(j - i);
    }
  }
  return num / den;
}

std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

}  // namespace fanohyp::weights
