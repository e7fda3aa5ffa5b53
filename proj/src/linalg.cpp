#include "confcoh/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace confcoh {

namespace {

using IntVec = std::vector<std::pair<int, BigInt>>;

IntVec primitive(const SparseVec& v, BigInt* scale_out = nullptr) {
  BigInt l = 1;
  for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
  IntVec out;
  out.reserve(v.size());
  for (const auto& e : v) {
    BigInt x = e.second.get_num() * (l / e.second.get_den());
    if (x != 0) out.emplace_back(e.first, std::move(x));
  }
  if (scale_out) *scale_out = l;
  return out;
}

// a*x + b*y
IntVec combine(const BigInt& a, const IntVec& x, const BigInt& b, const IntVec& y) {
  IntVec out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  BigInt t;
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, b * j->second);
      ++j;
    } else {
      t = a * i->second + b * j->second;
      if (t != 0) out.emplace_back(i->first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

void divide_content(IntVec& v, IntVec* combo) {
  BigInt g = 0;
  for (const auto& e : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) return;
  }
  if (combo)
    for (const auto& e : *combo) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
      if (g == 1) return;
    }
  if (g == 0) return;
  for (auto& e : v) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  if (combo)
    for (auto& e : *combo) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

SparseVec to_rational(const IntVec& v) {
  SparseVec out;
  out.reserve(v.size());
  for (const auto& e : v) out.emplace_back(e.first, Rat(e.second));
  return out;
}

}  // namespace

void Echelon::reduce(IntVec& v, IntVec* combo) const {
  while (!v.empty()) {
    auto it = pivot_.find(v.front().first);
    if (it == pivot_.end()) return;
    const Row& r = rows_[it->second];
    BigInt a = r.v.front().second;
    BigInt b = v.front().second;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    v = combine(a, v, -b, r.v);
    if (combo) *combo = combine(a, *combo, -b, r.combo);
    divide_content(v, combo);
  }
}

bool Echelon::insert(const SparseVec& v) {
  const int id = static_cast<int>(count_++);
  BigInt scale;
  IntVec x = primitive(v, &scale);
  IntVec combo;
  if (track_) {
    // combo carries the same scale as x
    combo.emplace_back(id, scale);
    divide_content(x, &combo);
  } else {
    divide_content(x, nullptr);
  }
  reduce(x, track_ ? &combo : nullptr);
  if (x.empty()) {
    if (track_) relations_.push_back(to_rational(combo));
    return false;
  }
  pivot_.emplace(x.front().first, rows_.size());
  rows_.push_back(Row{std::move(x), std::move(combo)});
  return true;
}

bool Echelon::in_span(const SparseVec& v) const {
  IntVec x = primitive(v);
  reduce(x, nullptr);
  return x.empty();
}

std::optional<SparseVec> Echelon::express(const SparseVec& v) const {
  if (!track_) throw std::logic_error("Echelon::express needs tracking");
  BigInt l;
  IntVec x = primitive(v, &l);
  constexpr int kTarget = -1;
  IntVec combo{{kTarget, l}};
  divide_content(x, &combo);
  reduce(x, &combo);
  if (!x.empty()) return std::nullopt;
  // t * v + sum c_i col_i = 0
  if (combo.empty() || combo.front().first != kTarget)
    return SparseVec{};  // v = 0
  Rat t(combo.front().second);
  SparseVec out;
  for (std::size_t k = 1; k < combo.size(); ++k) out.emplace_back(combo[k].first, -Rat(combo[k].second) / t);
  return out;
}

std::size_t rank(const std::vector<SparseVec>& cols) {
  Echelon e;
  for (const auto& c : cols) e.insert(c);
  return e.rank();
}

std::vector<SparseVec> kernel(const std::vector<SparseVec>& cols) {
  Echelon e(true);
  for (const auto& c : cols) e.insert(c);
  return e.relations();
}

std::optional<SparseVec> solve(const std::vector<SparseVec>& cols, const SparseVec& target) {
  Echelon e(true);
  for (const auto& c : cols) e.insert(c);
  return e.express(target);
}

SparseVec to_sparse(const std::vector<Rat>& dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.emplace_back(static_cast<int>(i), dense[i]);
  return out;
}

std::vector<Rat> to_dense(const SparseVec& v, std::size_t n) {
  std::vector<Rat> out(n);
  for (const auto& [i, x] : v) out.at(static_cast<std::size_t>(i)) = x;
  return out;
}

std::size_t rank_bareiss(const DenseMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt l = 1;
    for (const auto& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
  }
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank_naive(const DenseMatrix& m) {
  DenseMatrix a = m;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace confcoh
