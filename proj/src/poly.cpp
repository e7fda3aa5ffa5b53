#include "confcoh/poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace confcoh {

namespace {

struct ParamTable {
  std::mutex mutex;
  std::vector<std::string> names;
  std::unordered_map<std::string, std::int32_t> ids;
};

ParamTable& params() {
  static ParamTable table;
  return table;
}

const std::string& param_name(std::int32_t id) {
  auto& t = params();
  std::lock_guard<std::mutex> lock(t.mutex);
  return t.names.at(static_cast<std::size_t>(id));
}

}  // namespace

VarId VarId::lam(int index) {
  if (index < 1 || index >= kDelCode) throw std::out_of_range("lam index must be >= 1");
  return VarId(index);
}

VarId VarId::param(std::string_view name) {
  auto& t = params();
  std::lock_guard<std::mutex> lock(t.mutex);
  std::string key(name);
  auto it = t.ids.find(key);
  if (it != t.ids.end()) return VarId(kDelCode + 1 + it->second);
  auto id = static_cast<std::int32_t>(t.names.size());
  t.names.push_back(key);
  t.ids.emplace(std::move(key), id);
  return VarId(kDelCode + 1 + id);
}

const std::string& VarId::name() const {
  static const std::string empty;
  if (kind() != Kind::Param) return empty;
  return param_name(code_ - kDelCode - 1);
}

std::string VarId::to_string() const {
  switch (kind()) {
    case Kind::Lam: return "lam" + std::to_string(code_);
    case Kind::Del: return "d";
    case Kind::Param: return name();
  }
  return {};
}

bool operator<(VarId a, VarId b) {
  if (a.kind() == VarId::Kind::Param && b.kind() == VarId::Kind::Param && a.code_ != b.code_)
    return a.name() < b.name();
  return a.code_ < b.code_;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(VarId v, int exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::exponent(VarId v) const {
  for (const auto& f : factors_)
    if (f.first == v) return f.second;
  return 0;
}

int Monomial::degree_in_lams() const {
  int d = 0;
  for (const auto& f : factors_)
    if (f.first.is_lam()) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial Monomial::without(VarId v) const {
  Monomial out;
  for (const auto& f : factors_)
    if (f.first != v) out.factors_.push_back(f);
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += v.to_string();
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second;
      ++i;
      ++j;
    } else if (fa[i].first < fb[j].first) {
      return false;  // a has an earlier variable with positive exponent
    } else {
      return true;
    }
  }
  return i == fa.size() && j < fb.size();
}

std::size_t hash_value(const Monomial& m) {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& [v, e] : m.factors()) {
    h ^= static_cast<std::size_t>(v.code()) * 1099511628211ULL + static_cast<std::size_t>(e);
    h *= 1099511628211ULL;
  }
  return h;
}

// ------------------------------------------------------------------ RatPoly

RatPoly::RatPoly(const Rat& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

RatPoly RatPoly::monomial(const Monomial& m, const Rat& c) {
  RatPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

RatPoly RatPoly::lam_sum(int first, int last) {
  RatPoly p;
  for (int i = first; i <= last; ++i) p.add_term(Monomial::of(VarId::lam(i)), 1);
  return p;
}

bool RatPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat RatPoly::constant_term() const { return coeff(Monomial()); }

Rat RatPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

int RatPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

int RatPoly::degree_in(VarId v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(v));
  return d;
}

int RatPoly::lam_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree_in_lams());
  return d;
}

bool RatPoly::contains(VarId v) const {
  for (const auto& t : terms_)
    if (t.first.exponent(v) > 0) return true;
  return false;
}

std::vector<VarId> RatPoly::variables() const {
  std::vector<VarId> out;
  for (const auto& t : terms_)
    for (const auto& f : t.first.factors())
      if (std::find(out.begin(), out.end(), f.first) == out.end()) out.push_back(f.first);
  std::sort(out.begin(), out.end());
  return out;
}

void RatPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  RatPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  *this = *this * o;
  return *this;
}

RatPoly& RatPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

RatPoly RatPoly::pow(unsigned e) const {
  RatPoly out(1);
  RatPoly base = *this;
  while (e > 0) {
    if (e & 1U) out *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return out;
}

RatPoly RatPoly::substitute(VarId v, const RatPoly& repl) const {
  std::map<VarId, RatPoly> m;
  m.emplace(v, repl);
  return substitute(m);
}

RatPoly RatPoly::substitute(const std::map<VarId, RatPoly>& repl) const {
  // powers of each replacement are cached per call
  std::map<std::pair<std::int32_t, int>, RatPoly> cache;
  auto power = [&](VarId v, const RatPoly& base, int e) -> const RatPoly& {
    auto key = std::make_pair(v.code(), e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, base.pow(static_cast<unsigned>(e))).first->second;
  };
  RatPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial kept;
    RatPoly factor(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = repl.find(v);
      if (it == repl.end()) {
        kept.factors_.emplace_back(v, e);
      } else {
        factor *= power(v, it->second, e);
        if (factor.is_zero()) break;
      }
    }
    if (factor.is_zero()) continue;
    for (const auto& [fm, fc] : factor.terms_) out.add_term(fm * kept, fc);
  }
  return out;
}

RatPoly RatPoly::rename(const std::map<VarId, VarId>& ren) const {
  RatPoly out;
  std::vector<Monomial::Factor> buf;
  for (const auto& [m, c] : terms_) {
    buf.clear();
    for (const auto& [v, e] : m.factors()) {
      auto it = ren.find(v);
      buf.emplace_back(it == ren.end() ? v : it->second, e);
    }
    out.add_term(Monomial::from_factors(buf), c);
  }
  return out;
}

RatPoly RatPoly::derivative(VarId v) const {
  RatPoly out;
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    Monomial rest = m.without(v);
    out.add_term(rest * Monomial::of(v, e - 1), c * e);
  }
  return out;
}

std::vector<RatPoly> RatPoly::coefficients_in(VarId v) const {
  std::vector<RatPoly> out;
  for (const auto& [m, c] : terms_) {
    const auto e = static_cast<std::size_t>(m.exponent(v));
    if (out.size() <= e) out.resize(e + 1);
    out[e].add_term(m.without(v), c);
  }
  return out;
}

RatPoly RatPoly::divide_exact_linear(const RatPoly& divisor, VarId pivot) const {
  if (divisor.degree_in(pivot) != 1 || divisor.coeff(Monomial::of(pivot)) != 1)
    throw std::invalid_argument("divisor must be monic linear in the pivot variable");
  // divisor = pivot + r, with r free of pivot; synthetic division in pivot.
  const RatPoly rest = divisor - RatPoly::var(pivot);
  if (rest.contains(pivot)) throw std::invalid_argument("divisor not linear in pivot");
  std::vector<RatPoly> coeffs = coefficients_in(pivot);  // p = sum c_k pivot^k
  if (coeffs.empty()) return {};
  const std::size_t n = coeffs.size() - 1;
  // quotient q = sum q_k pivot^k, k < n: q_{n-1} = c_n, q_{k-1} = c_k - r q_k
  std::vector<RatPoly> q(n);
  RatPoly carry;
  for (std::size_t k = n; k >= 1; --k) {
    q[k - 1] = coeffs[k] - rest * carry;
    carry = q[k - 1];
  }
  if (coeffs[0] - rest * carry != RatPoly())
    throw std::domain_error("polynomial not divisible by " + divisor.to_string());
  RatPoly out;
  for (std::size_t k = 0; k < n; ++k)
    out += q[k] * RatPoly::monomial(Monomial::of(pivot, static_cast<int>(k)), 1);
  return out;
}

std::string RatPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << m.to_string();
    }
  }
  return os.str();
}

}  // namespace confcoh
