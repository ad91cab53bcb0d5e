#include "liegate/quadops.hpp"

#include "liegate/errors.hpp"

#include <algorithm>
#include <sstream>

namespace liegate {

QuadraticObservable::QuadraticObservable(int dof) : dof_(dof) {
  if (dof != 1 && dof != 2) throw DomainError("observable dof must be 1 or 2");
  lin_.assign(dim(), Rational(0));
  quad_.assign(dim() * dim(), Rational(0));
}

QuadraticObservable& QuadraticObservable::set_scal(Rational v) {
  scal_ = std::move(v);
  return *this;
}

QuadraticObservable& QuadraticObservable::set_lin(int i, Rational v) {
  lin_.at(i) = std::move(v);
  return *this;
}

QuadraticObservable& QuadraticObservable::set_quad(int i, int j, Rational v) {
  quad_.at(i * dim() + j) = v;
  quad_.at(j * dim() + i) = std::move(v);
  return *this;
}

bool QuadraticObservable::is_zero() const {
  if (scal_ != 0) return false;
  for (auto& v : lin_)
    if (v != 0) return false;
  for (auto& v : quad_)
    if (v != 0) return false;
  return true;
}

static void require_same_dof(const QuadraticObservable& a, const QuadraticObservable& b) {
  if (a.dof() != b.dof())
    throw DomainError("observables have different dof (" + std::to_string(a.dof()) + " vs " +
                      std::to_string(b.dof()) + ")");
}

QuadraticObservable QuadraticObservable::operator+(const QuadraticObservable& o) const {
  require_same_dof(*this, o);
  QuadraticObservable r(*this);
  r.scal_ += o.scal_;
  for (size_t i = 0; i < lin_.size(); ++i) r.lin_[i] += o.lin_[i];
  for (size_t i = 0; i < quad_.size(); ++i) r.quad_[i] += o.quad_[i];
  return r;
}

QuadraticObservable QuadraticObservable::operator-(const QuadraticObservable& o) const {
  return *this + o * Rational(-1);
}

QuadraticObservable QuadraticObservable::operator*(const Rational& k) const {
  QuadraticObservable r(*this);
  r.scal_ *= k;
  for (auto& v : r.lin_) v *= k;
  for (auto& v : r.quad_) v *= k;
  return r;
}

std::vector<Rational> QuadraticObservable::coords() const {
  std::vector<Rational> out;
  out.push_back(scal_);
  out.insert(out.end(), lin_.begin(), lin_.end());
  for (int i = 0; i < dim(); ++i)
    for (int j = i; j < dim(); ++j) out.push_back(quad(i, j));
  return out;
}

std::string QuadraticObservable::str() const {
  static const char* n1[] = {"x", "p"};
  static const char* n2[] = {"x", "y", "px", "py"};
  auto name = [&](int i) { return dof_ == 1 ? n1[i] : n2[i]; };
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& c, const std::string& m) {
    if (c == 0) return;
    if (!first) os << " + ";
    os << "(" << c << ")" << m;
    first = false;
  };
  term(scal_, "");
  for (int i = 0; i < dim(); ++i) term(lin_[i], std::string("*") + name(i));
  for (int i = 0; i < dim(); ++i)
    for (int j = i; j < dim(); ++j) {
      // ½ zᵀHz: diagonal contributes H/2 z², off-diagonal H·sym(z_i z_j)
      Rational c = i == j ? quad(i, j) / 2 : quad(i, j);
      term(c, std::string("*") + name(i) + "*" + name(j));
    }
  if (first) os << "0";
  return os.str();
}

int algebra_size(Algebra alg) {
  switch (alg) {
    case Algebra::LP: return 4;
    case Algebra::GHO: return 6;
    case Algebra::CP: return 15;
  }
  return 0;
}

int algebra_dof(Algebra alg) { return alg == Algebra::CP ? 2 : 1; }

const char* algebra_name(Algebra alg) {
  switch (alg) {
    case Algebra::LP: return "LP";
    case Algebra::GHO: return "GHO";
    case Algebra::CP: return "CP";
  }
  return "?";
}

namespace {

QuadraticObservable identity(int dof) { return QuadraticObservable(dof).set_scal(1); }
QuadraticObservable coord(int dof, int i) { return QuadraticObservable(dof).set_lin(i, 1); }
QuadraticObservable square(int dof, int i) { return QuadraticObservable(dof).set_quad(i, i, 2); }
// z_i z_j + z_j z_i
QuadraticObservable anticomm(int dof, int i, int j) {
  return QuadraticObservable(dof).set_quad(i, j, 2);
}
// sym(z_i z_j) for i != j
QuadraticObservable product(int dof, int i, int j) {
  return QuadraticObservable(dof).set_quad(i, j, 1);
}

}  // namespace

QuadraticObservable generator(Algebra alg, int index) {
  const int n = algebra_size(alg);
  if (index < 1 || index > n)
    throw DomainError(std::string("generator index ") + std::to_string(index) +
                      " out of range for " + algebra_name(alg) + " (size " + std::to_string(n) +
                      ")");
  if (alg == Algebra::LP) {
    switch (index) {
      case 1: return identity(1);
      case 2: return coord(1, 0);
      case 3: return coord(1, 1);
      default: return square(1, 1);
    }
  }
  if (alg == Algebra::GHO) {
    switch (index) {
      case 1: return identity(1);
      case 2: return coord(1, 0);
      case 3: return coord(1, 1);
      case 4: return square(1, 0);
      case 5: return square(1, 1);
      default: return anticomm(1, 0, 1);
    }
  }
  constexpr int X = 0, Y = 1, PX = 2, PY = 3;
  switch (index) {
    case 1: return identity(2);
    case 2: return coord(2, X);
    case 3: return coord(2, PX);
    case 4: return square(2, X);
    case 5: return square(2, PX);
    case 6: return anticomm(2, X, PX);
    case 7: return coord(2, Y);
    case 8: return coord(2, PY);
    case 9: return square(2, Y);
    case 10: return square(2, PY);
    case 11: return anticomm(2, Y, PY);
    case 12: return product(2, X, PY) - product(2, Y, PX);
    case 13: return product(2, X, PY) + product(2, Y, PX);
    case 14: return product(2, X, Y);
    default: return product(2, PX, PY);
  }
}

QuadraticObservable commutator(const QuadraticObservable& a, const QuadraticObservable& b) {
  require_same_dof(a, b);
  const int d = a.dim(), n = a.dof();
  // J = [[0, I], [-I, 0]]; (J v)_i
  auto Jv = [&](auto&& v, int i) -> Rational { return i < n ? v(i + n) : -v(i - n); };

  QuadraticObservable c(n);
  // scal = l_Aᵀ J l_B
  Rational s = 0;
  for (int i = 0; i < d; ++i) s += a.lin(i) * Jv([&](int k) { return b.lin(k); }, i);
  c.set_scal(s);

  // lin = H_A J l_B - H_B J l_A
  for (int i = 0; i < d; ++i) {
    Rational v = 0;
    for (int k = 0; k < d; ++k) {
      v += a.quad(i, k) * Jv([&](int m) { return b.lin(m); }, k);
      v -= b.quad(i, k) * Jv([&](int m) { return a.lin(m); }, k);
    }
    c.set_lin(i, v);
  }

  // quad = H_A J H_B - H_B J H_A  (symmetric since H_A J H_B transposes to -H_B J H_A)
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rational v = 0;
      for (int k = 0; k < d; ++k) {
        v += a.quad(i, k) * Jv([&](int m) { return b.quad(m, j); }, k);
        v -= b.quad(i, k) * Jv([&](int m) { return a.quad(m, j); }, k);
      }
      c.set_quad(i, j, v);
    }
  return c;
}

Rational StructureTable::c(int i, int j, int k) const {
  Rational sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  for (auto& e : entries)
    if (e.i == i && e.j == j && e.k == k) return sign * e.c;
  return 0;
}

std::vector<Rational> decompose(const QuadraticObservable& obs, Algebra alg) {
  if (obs.dof() != algebra_dof(alg))
    throw DomainError(std::string("observable dof does not match algebra ") + algebra_name(alg));
  const int n = algebra_size(alg);
  std::vector<std::vector<Rational>> cols;
  for (int k = 1; k <= n; ++k) cols.push_back(generator(alg, k).coords());
  const auto rhs = obs.coords();
  const int rows = static_cast<int>(rhs.size());

  // Augmented matrix, reduced row echelon form.
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(n + 1));
  for (int r = 0; r < rows; ++r) {
    for (int k = 0; k < n; ++k) m[r][k] = cols[k][r];
    m[r][n] = rhs[r];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int k = 0; k < n && r < rows; ++k) {
    int p = r;
    while (p < rows && m[p][k] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][k];
    for (auto& v : m[r]) v *= inv;
    for (int q = 0; q < rows; ++q) {
      if (q == r || m[q][k] == 0) continue;
      Rational f = m[q][k];
      for (int c = 0; c <= n; ++c) m[q][c] -= f * m[r][c];
    }
    pivot_col.push_back(k);
    ++r;
  }
  for (int q = r; q < rows; ++q)
    if (m[q][n] != 0)
      throw ConsistencyError(std::string("observable ") + obs.str() + " is not in the span of " +
                             algebra_name(alg));
  std::vector<Rational> out(n, Rational(0));
  for (int q = 0; q < r; ++q) out[pivot_col[q]] = m[q][n];
  return out;
}

StructureTable structure_constants(Algebra alg) {
  const int n = algebra_size(alg);
  std::vector<QuadraticObservable> g;
  for (int k = 1; k <= n; ++k) g.push_back(generator(alg, k));
  StructureTable t{alg, n, {}, 0};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto coef = decompose(commutator(g[i - 1], g[j - 1]), alg);
      ++t.pairs_checked;
      for (int k = 1; k <= n; ++k)
        if (coef[k - 1] != 0) t.entries.push_back({i, j, k, coef[k - 1]});
    }
  return t;
}

}  // namespace liegate
