#include "bundles.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace fanohyp::bundles {

namespace {

using weights::Entry;
using weights::Partition;
using weights::Weight;

Weight pad(const Weight& w, int len) {
  if (static_cast<int>(w.size()) > len)
    throw std::invalid_argument("weight has too many entries for this space");
  Weight v = w;
  v.resize(len, 0);
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1])
      throw std::invalid_argument("weight entries must be weakly decreasing");
  return v;
}

Weight weight_of(const std::vector<int>& v) {
  return Weight(v.begin(), v.end());
}

}  // namespace

Grassmannian::Grassmannian(int k_, int n_) : k(k_), n(n_) {
  if (k < 1 || k >= n)
    throw std::invalid_argument("Grassmannian requires 1 <= k < n");
}

std::string Grassmannian::to_string() const {
  return "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

BundleSymbol::BundleSymbol(Grassmannian g, Partition u, Partition q,
                           long long twist)
    : space_(g), u_(std::move(u)), q_(std::move(q)), twist_(twist) {}

BundleSymbol BundleSymbol::make(const Grassmannian& g, const Weight& u,
                                const Weight& q, long long twist) {
  Weight up = pad(u, g.k);
  Weight qp = pad(q, g.quot_rank());
  // det U* = O(1) and det Q* = O(-1): strip the determinant part of each
  // block into the twist.
  Entry cu = up.back();
  Entry cq = qp.back();
  for (auto& e : up) e -= cu;
  for (auto& e : qp) e -= cq;
  return BundleSymbol(g, Partition(up), Partition(qp), twist + cu - cq);
}

Int BundleSymbol::rank() const {
  return weights::weyl_dim(u_, space_.k) *
         weights::weyl_dim(q_, space_.quot_rank());
}

BundleSymbol BundleSymbol::dual() const {
  Weight up = u_.parts();
  up.resize(space_.k, 0);
  Weight qp = q_.parts();
  qp.resize(space_.quot_rank(), 0);
  Weight ud(up.size()), qd(qp.size());
  for (std::size_t i = 0; i < up.size(); ++i) ud[i] = -up[up.size() - 1 - i];
  for (std::size_t i = 0; i < qp.size(); ++i) qd[i] = -qp[qp.size() - 1 - i];
  return make(space_, ud, qd, -twist_);
}

BundleSymbol BundleSymbol::twisted(long long dt) const {
  return BundleSymbol(space_, u_, q_, twist_ + dt);
}

Weight BundleSymbol::to_alpha() const {
  Weight alpha(space_.n);
  for (int i = 0; i < space_.k; ++i) alpha[i] = u_.part(i);
  for (int j = 0; j < space_.quot_rank(); ++j)
    alpha[space_.k + j] = q_.part(j) - twist_;
  return alpha;
}

std::string BundleSymbol::to_string() const {
  std::vector<std::string> parts;
  if (!u_.empty()) {
    if (u_.parts() == Weight{1})
      parts.push_back("U∨");
    else
      parts.push_back("K" + u_.to_string() + "U∨");
  }
  if (!q_.empty()) {
    if (q_.parts() == Weight{1})
      parts.push_back("Q∨");
    else
      parts.push_back("K" + q_.to_string() + "Q∨");
  }
  if (parts.empty()) return "O(" + std::to_string(twist_) + ")";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " ⊗ ";
    out += parts[i];
  }
  if (twist_ != 0) out += " ⊗ O(" + std::to_string(twist_) + ")";
  return out;
}

Cohomology cohomology(const BundleSymbol& s) {
  auto norm = weights::normalize(s.to_alpha());
  Cohomology c;
  if (norm.singular()) return c;
  c.vanishes = false;
  c.degree = norm.length;
  c.dim = weights::weyl_dim(norm.dominant, s.space().n);
  return c;
}

Int h(const BundleSymbol& s, int i) {
  auto c = cohomology(s);
  if (c.vanishes || c.degree != i) return 0;
  return c.dim;
}

Int euler_characteristic(const BundleSymbol& s) {
  auto c = cohomology(s);
  if (c.vanishes) return 0;
  return (c.degree % 2 == 0) ? c.dim : -c.dim;
}

BundleSum BundleSum::of(const BundleSymbol& s, long long mult) {
  BundleSum b(s.space());
  b.add(s, mult);
  return b;
}

void BundleSum::add(const BundleSymbol& s, long long mult) {
  if (!(s.space() == space_))
    throw std::invalid_argument("cannot mix bundles on different spaces");
  long long& slot = terms_[s];
  slot += mult;
  if (slot == 0) terms_.erase(s);
}

void BundleSum::add(const BundleSum& other, long long mult) {
  for (const auto& [s, m] : other.terms()) add(s, m * mult);
}

Int BundleSum::rank() const {
  Int r = 0;
  for (const auto& [s, m] : terms_) r += s.rank() * m;
  return r;
}

long long BundleSum::rank_ll() const {
  return rank().convert_to<long long>();
}

BundleSum BundleSum::dual() const {
  BundleSum out(space_);
  for (const auto& [s, m] : terms_) out.add(s.dual(), m);
  return out;
}

BundleSum BundleSum::twisted(long long dt) const {
  BundleSum out(space_);
  for (const auto& [s, m] : terms_) out.add(s.twisted(dt), m);
  return out;
}

std::string BundleSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, m] : terms_) {
    if (!first) out += " ⊕ ";
    first = false;
    out += s.to_string();
    if (m != 1) out += "^" + std::to_string(m);
  }
  return out;
}

Int h(const BundleSum& s, int i) {
  Int total = 0;
  for (const auto& [sym, m] : s.terms()) total += h(sym, i) * m;
  return total;
}

Int euler_characteristic(const BundleSum& s) {
  Int total = 0;
  for (const auto& [sym, m] : s.terms()) total += euler_characteristic(sym) * m;
  return total;
}

namespace {

// Count Littlewood-Richardson fillings of nu/lambda with content mu:
// semistandard, and reading right-to-left along rows from the top the
// running count of each label stays <= the count of the previous label.
long long count_lr_fillings(const Weight& nu, const Partition& lambda,
                            const Partition& mu) {
  int rows = static_cast<int>(nu.size());
  int labels = static_cast<int>(mu.rows());
  std::vector<std::vector<int>> grid(rows);
  for (int i = 0; i < rows; ++i) grid[i].assign(nu[i], 0);
  std::vector<Entry> cnt(labels + 1, 0);

  long long total = 0;
  // Cells in reverse reading order.
  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = static_cast<int>(nu[r]) - 1; c >= lambda.part(r); --c)
      cells.push_back({r, c});

  auto dfs = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1, hi = labels;
    if (r > 0 && c >= lambda.part(r - 1)) lo = std::max(lo, grid[r - 1][c] + 1);
    if (c + 1 < static_cast<int>(nu[r])) hi = std::min(hi, grid[r][c + 1]);
    for (int t = lo; t <= hi; ++t) {
      if (cnt[t] >= mu.part(t - 1)) continue;
      if (t > 1 && cnt[t] >= cnt[t - 1]) continue;
      ++cnt[t];
      grid[r][c] = t;
      self(self, idx + 1);
      --cnt[t];
    }
  };
  dfs(dfs, 0);
  return total;
}

}  // namespace

std::map<Partition, long long> lr_tensor(const Partition& a, const Partition& b,
                                         int cap_rows) {
  // Symmetric in the two factors; fill the smaller one for speed.
  const Partition& lambda = (a.sum() >= b.sum()) ? a : b;
  const Partition& mu = (a.sum() >= b.sum()) ? b : a;

  using Key = std::tuple<Weight, Weight, int>;
  static std::map<Key, std::map<Partition, long long>> memo;
  static std::mutex memo_mutex;
  Key key{lambda.parts(), mu.parts(), cap_rows};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  std::map<Partition, long long> out;
  if (static_cast<int>(lambda.rows()) <= cap_rows) {
    if (mu.empty()) {
      out[lambda] = 1;
    } else {
      Entry total = lambda.sum() + mu.sum();
      // Enumerate candidate outer shapes nu row by row.
      Weight nu;
      auto grow = [&](auto&& self, int row, Entry placed) -> void {
        if (placed == total) {
          Weight shape = nu;
          while (!shape.empty() && shape.back() == 0) shape.pop_back();
          if (static_cast<int>(shape.size()) <= cap_rows) {
            long long c = count_lr_fillings(shape, lambda, mu);
            if (c) out[Partition(shape)] += c;
          }
          return;
        }
        if (row >= cap_rows || placed > total) return;
        Entry lo = lambda.part(row);
        Entry hi = row == 0 ? lambda.part(0) + mu.part(0) : nu[row - 1];
        for (Entry v = lo; v <= hi && placed + v <= total; ++v) {
          nu.push_back(v);
          self(self, row + 1, placed + v);
          nu.pop_back();
        }
      };
      grow(grow, 0, 0);
    }
  }

  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

BundleSum tensor(const BundleSymbol& a, const BundleSymbol& b) {
  if (!(a.space() == b.space()))
    throw std::invalid_argument("cannot tensor bundles on different spaces");
  const auto& g = a.space();
  auto cu = lr_tensor(a.u(), b.u(), g.k);
  auto cq = lr_tensor(a.q(), b.q(), g.quot_rank());
  BundleSum out(g);
  for (const auto& [du, mu] : cu)
    for (const auto& [dq, mq] : cq)
      out.add(BundleSymbol::make(g, du.parts(), dq.parts(),
                                 a.twist() + b.twist()),
              mu * mq);
  return out;
}

BundleSum tensor(const BundleSum& a, const BundleSum& b) {
  if (!(a.space() == b.space()))
    throw std::invalid_argument("cannot tensor bundles on different spaces");
  BundleSum out(a.space());
  for (const auto& [sa, ma] : a.terms())
    for (const auto& [sb, mb] : b.terms()) out.add(tensor(sa, sb), ma * mb);
  return out;
}

const std::vector<std::vector<int>>& ssyt_contents(const Partition& shape,
                                                   int m) {
  using Key = std::pair<Weight, int>;
  static std::map<Key, std::vector<std::vector<int>>> memo;
  static std::mutex memo_mutex;
  Key key{shape.parts(), m};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  std::vector<std::vector<int>> out;
  if (static_cast<int>(shape.rows()) <= m) {
    int rows = static_cast<int>(shape.rows());
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(shape.part(r), 0);
    std::vector<int> content(m, 0);
    auto dfs = [&](auto&& self, int r, int c) -> void {
      if (r == rows) {
        out.push_back(content);
        return;
      }
      if (c == static_cast<int>(shape.part(r))) {
        self(self, r + 1, 0);
        return;
      }
      int lo = 1;
      if (c > 0) lo = std::max(lo, grid[r][c - 1]);
      if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
      for (int t = lo; t <= m; ++t) {
        grid[r][c] = t;
        ++content[t - 1];
        self(self, r, c + 1);
        --content[t - 1];
      }
    };
    dfs(dfs, 0, 0);
  }

  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

namespace {

using WeightPair = std::pair<std::vector<int>, std::vector<int>>;
using Character = std::map<WeightPair, long long>;

WeightPair add_pairs(const WeightPair& a, const WeightPair& b) {
  WeightPair out = a;
  for (std::size_t i = 0; i < out.first.size(); ++i)
    out.first[i] += b.first[i];
  for (std::size_t i = 0; i < out.second.size(); ++i)
    out.second[i] += b.second[i];
  return out;
}

}  // namespace

BundleSum power(const BundleSymbol& s, int p, PowerKind kind) {
  if (p < 0) throw std::invalid_argument("negative power");
  const auto& g = s.space();
  int k = g.k;
  int m = g.quot_rank();

  // Weight-by-weight knapsack over the character of the untwisted symbol.
  const auto& us = ssyt_contents(s.u(), k);
  const auto& qs = ssyt_contents(s.q(), m);
  std::vector<Character> acc(p + 1);
  acc[0][{std::vector<int>(k, 0), std::vector<int>(m, 0)}] = 1;
  for (const auto& cu : us) {
    for (const auto& cq : qs) {
      WeightPair w{cu, cq};
      if (kind == PowerKind::Exterior) {
        for (int j = p; j >= 1; --j)
          for (const auto& [wt, c] : acc[j - 1]) acc[j][add_pairs(wt, w)] += c;
      } else {
        for (int j = 1; j <= p; ++j)
          for (const auto& [wt, c] : acc[j - 1]) acc[j][add_pairs(wt, w)] += c;
      }
    }
  }

  // Peel highest weights: the lexicographically largest weight of the
  // character is dominant and is the highest weight of a constituent.
  Character target = std::move(acc[p]);
  for (auto it = target.begin(); it != target.end();)
    it = (it->second == 0) ? target.erase(it) : std::next(it);

  BundleSum out(g);
  while (!target.empty()) {
    auto top = std::prev(target.end());
    WeightPair wstar = top->first;
    long long c = top->second;
    if (c < 0) throw std::logic_error("character peeling went negative");
    Partition pu(weight_of(wstar.first));
    Partition pq(weight_of(wstar.second));
    out.add(BundleSymbol::make(g, pu.parts(), pq.parts(),
                               static_cast<long long>(p) * s.twist()),
            c);
    for (const auto& cu : ssyt_contents(pu, k)) {
      for (const auto& cq : ssyt_contents(pq, m)) {
        auto it = target.find({cu, cq});
        if (it == target.end() || it->second < c)
          throw std::logic_error("character peeling went negative");
        it->second -= c;
        if (it->second == 0) target.erase(it);
      }
    }
  }
  return out;
}

std::vector<BundleSum> exterior_powers_of_sum(const BundleSum& e) {
  const auto& g = e.space();
  long long total = e.rank_ll();
  std::vector<BundleSum> acc(total + 1, BundleSum(g));
  acc[0].add(BundleSymbol::make(g, {}, {}, 0));
  long long used = 0;
  for (const auto& [sym, mult] : e.terms()) {
    long long r = sym.rank().convert_to<long long>();
    std::vector<BundleSum> pows;
    for (long long i = 0; i <= r; ++i)
      pows.push_back(power(sym, static_cast<int>(i), PowerKind::Exterior));
    for (long long copy = 0; copy < mult; ++copy) {
      used += r;
      for (long long j = std::min(used, total); j >= 1; --j) {
        BundleSum next(g);
        for (long long i = 0; i <= std::min<long long>(r, j); ++i) {
          if (i == 0) {
            next.add(acc[j]);
          } else if (!acc[j - i].empty()) {
            next.add(tensor(acc[j - i], pows[i]));
          }
        }
        acc[j] = std::move(next);
      }
    }
  }
  return acc;
}

}  // namespace fanohyp::bundles
