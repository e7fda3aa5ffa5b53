#include "confcoh/lie.hpp"

#include <algorithm>
#include <map>

namespace confcoh {

RatMatrix mat_zero(int rows, int cols) {
  return RatMatrix(static_cast<std::size_t>(rows), std::vector<Rat>(static_cast<std::size_t>(cols)));
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b.front().size();
  RatMatrix out(n, std::vector<Rat>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

std::vector<Rat> mat_apply(const RatMatrix& a, const std::vector<Rat>& v) {
  std::vector<Rat> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) out[i] += a[i][j] * v[j];
  return out;
}

std::optional<std::string> LiePresentation::validate(const Constants& c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != n) return "structure constants are not n x n x n";
    for (std::size_t j = 0; j < n; ++j)
      if (c[i][j].size() != n) return "structure constants are not n x n x n";
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c[i][j][k] != -c[j][i][k])
          return "antisymmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
  // [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]] = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rat s = 0;
          for (std::size_t m = 0; m < n; ++m) {
            s += c[j][k][m] * c[i][m][l];
            s += c[k][i][m] * c[j][m][l];
            s += c[i][j][m] * c[k][m][l];
          }
          if (s != 0)
            return "Jacobi fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + ")";
        }
  return std::nullopt;
}

LiePresentation::LiePresentation(std::string name, std::vector<std::string> basis, Constants c)
    : name_(std::move(name)), basis_(std::move(basis)), c_(std::move(c)) {
  if (c_.size() != basis_.size()) throw InvalidLieAlgebra("basis size does not match constants");
  if (auto err = validate(c_)) throw InvalidLieAlgebra(name_ + ": " + *err);
}

int LiePresentation::index_of(const std::string& name) const {
  auto it = std::find(basis_.begin(), basis_.end(), name);
  return it == basis_.end() ? -1 : static_cast<int>(it - basis_.begin());
}

std::vector<Rat> LiePresentation::bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  const int n = dim();
  std::vector<Rat> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      Rat s = x[i] * y[j];
      for (int k = 0; k < n; ++k)
        if (c_[i][j][k] != 0) out[k] += s * c_[i][j][k];
    }
  }
  return out;
}

namespace {

LiePresentation::Constants zeros(int n) {
  return LiePresentation::Constants(
      static_cast<std::size_t>(n),
      std::vector<std::vector<Rat>>(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n))));
}

// traceless 3x3 matrices in the basis x12 x13 x23 x21 x31 x32 h1 h2
const int kOff[6][2] = {{0, 1}, {0, 2}, {1, 2}, {1, 0}, {2, 0}, {2, 1}};

RatMatrix sl3_matrix(int b) {
  RatMatrix m = mat_zero(3, 3);
  if (b < 6) {
    m[kOff[b][0]][kOff[b][1]] = 1;
  } else if (b == 6) {
    m[0][0] = 1;
    m[1][1] = -1;
  } else {
    m[1][1] = 1;
    m[2][2] = -1;
  }
  return m;
}

std::vector<Rat> sl3_coords(const RatMatrix& m) {
  std::vector<Rat> v(8);
  for (int b = 0; b < 6; ++b) v[b] = m[kOff[b][0]][kOff[b][1]];
  v[6] = m[0][0];
  v[7] = -m[2][2];
  return v;
}

}  // namespace

LiePresentation LiePresentation::sl2() {
  auto c = zeros(3);
  // e=0, f=1, h=2
  c[0][1][2] = 1;
  c[1][0][2] = -1;
  c[2][0][0] = 2;
  c[0][2][0] = -2;
  c[2][1][1] = -2;
  c[1][2][1] = 2;
  return LiePresentation("sl2", {"e", "f", "h"}, c);
}

LiePresentation LiePresentation::sl3() {
  auto c = zeros(8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      RatMatrix a = sl3_matrix(i);
      RatMatrix b = sl3_matrix(j);
      c[i][j] = sl3_coords(mat_sub(mat_mul(a, b), mat_mul(b, a)));
    }
  return LiePresentation("sl3", {"x12", "x13", "x23", "x21", "x31", "x32", "h1", "h2"}, c);
}

LiePresentation LiePresentation::abelian(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));
  return LiePresentation("abelian" + std::to_string(n), names, zeros(n));
}

std::optional<std::string> check_representation(const LiePresentation& g,
                                                const std::vector<RatMatrix>& rho) {
  const int n = g.dim();
  if (static_cast<int>(rho.size()) != n) return "wrong number of matrices";
  const std::size_t d = rho.empty() ? 0 : rho.front().size();
  for (const auto& m : rho) {
    if (m.size() != d) return "matrices of different sizes";
    for (const auto& row : m)
      if (row.size() != d) return "matrix not square";
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatMatrix lhs = mat_sub(mat_mul(rho[i], rho[j]), mat_mul(rho[j], rho[i]));
      RatMatrix rhs = mat_zero(static_cast<int>(d), static_cast<int>(d));
      for (int k = 0; k < n; ++k) {
        if (g.c(i, j, k) == 0) continue;
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t s = 0; s < d; ++s) rhs[r][s] += g.c(i, j, k) * rho[k][r][s];
      }
      if (lhs != rhs)
        return "[rho(" + g.basis()[i] + "), rho(" + g.basis()[j] + ")] != rho([" + g.basis()[i] +
               ", " + g.basis()[j] + "])";
    }
  return std::nullopt;
}

LieRep adjoint_rep(const LiePresentation& g) {
  const int n = g.dim();
  LieRep r{"adjoint", {}};
  for (int i = 0; i < n; ++i) {
    RatMatrix m = mat_zero(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m[k][j] = g.c(i, j, k);
    r.rho.push_back(m);
  }
  return r;
}

LieRep trivial_rep(const LiePresentation& g, int n) {
  return LieRep{"trivial" + std::to_string(n),
                std::vector<RatMatrix>(static_cast<std::size_t>(g.dim()), mat_zero(n, n))};
}

LieRep sl2_irrep(int m) {
  const int d = m + 1;
  RatMatrix e = mat_zero(d, d);
  RatMatrix f = mat_zero(d, d);
  RatMatrix h = mat_zero(d, d);
  for (int k = 0; k <= m; ++k) {
    h[k][k] = m - 2 * k;
    if (k < m) f[k + 1][k] = 1;
    if (k > 0) e[k - 1][k] = k * (m - k + 1);
  }
  return LieRep{"V" + std::to_string(m), {e, f, h}};
}

LieRep sl3_standard() {
  LieRep r{"C3", {}};
  for (int b = 0; b < 8; ++b) r.rho.push_back(sl3_matrix(b));
  return r;
}

namespace {

void multi_indices(int dim, int n, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < dim; ++i) {
    cur.push_back(i);
    multi_indices(dim, n, i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

LieRep sym_power(const LieRep& r, int n, std::vector<std::vector<int>>* monomials) {
  std::vector<std::vector<int>> basis;
  std::vector<int> cur;
  multi_indices(r.dim(), n, 0, cur, basis);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  const int d = static_cast<int>(basis.size());
  LieRep out{"Sym" + std::to_string(n) + "(" + r.name + ")", {}};
  for (const auto& m : r.rho) {
    RatMatrix a = mat_zero(d, d);
    for (int col = 0; col < d; ++col) {
      const auto& mono = basis[col];
      for (int s = 0; s < n; ++s)
        for (int i = 0; i < r.dim(); ++i) {
          const Rat& x = m[i][mono[s]];
          if (x == 0) continue;
          std::vector<int> img = mono;
          img[s] = i;
          std::sort(img.begin(), img.end());
          a[index.at(img)][col] += x;
        }
    }
    out.rho.push_back(a);
  }
  if (monomials) *monomials = basis;
  return out;
}

LieRep exterior_square(const LieRep& r, std::vector<std::pair<int, int>>* pairs) {
  std::vector<std::pair<int, int>> basis;
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < r.dim(); ++i)
    for (int j = i + 1; j < r.dim(); ++j) {
      index[{i, j}] = static_cast<int>(basis.size());
      basis.emplace_back(i, j);
    }
  const int d = static_cast<int>(basis.size());
  LieRep out{"Wedge2(" + r.name + ")", {}};
  auto add = [&](RatMatrix& a, int col, int i, int j, const Rat& x) {
    if (i == j || x == 0) return;
    if (i < j)
      a[index.at({i, j})][col] += x;
    else
      a[index.at({j, i})][col] -= x;
  };
  for (const auto& m : r.rho) {
    RatMatrix a = mat_zero(d, d);
    for (int col = 0; col < d; ++col) {
      auto [i, j] = basis[col];
      for (int k = 0; k < r.dim(); ++k) {
        add(a, col, k, j, m[k][i]);
        add(a, col, i, k, m[k][j]);
      }
    }
    out.rho.push_back(a);
  }
  if (pairs) *pairs = basis;
  return out;
}

std::vector<RatMatrix> equivariant_maps(const LiePresentation& g, const LieRep& from,
                                        const LieRep& to) {
  const int p = to.dim();
  const int q = from.dim();
  // unknown (a,b) -> column; equation (x, r, c) -> row
  std::vector<SparseVec> cols;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b) {
      std::map<int, Rat> col;
      for (int x = 0; x < g.dim(); ++x) {
        // (rho_to(x) Phi)[r][c] has rho_to(x)[r][a] Phi[a][c]: c = b
        for (int r = 0; r < p; ++r) {
          const Rat& v = to.rho[x][r][a];
          if (v != 0) col[(x * p + r) * q + b] += v;
        }
        // (Phi rho_from(x))[r][c] has Phi[r][b] rho_from(x)[b][c]: r = a
        for (int c = 0; c < q; ++c) {
          const Rat& v = from.rho[x][b][c];
          if (v != 0) col[(x * p + a) * q + c] -= v;
        }
      }
      SparseVec sv;
      for (auto& [k, v] : col)
        if (v != 0) sv.emplace_back(k, v);
      cols.push_back(sv);
    }
  std::vector<RatMatrix> out;
  for (const auto& ker : kernel(cols)) {
    RatMatrix m = mat_zero(p, q);
    for (const auto& [idx, v] : ker) m[idx / q][idx % q] = v;
    out.push_back(m);
  }
  return out;
}

}  // namespace confcoh
