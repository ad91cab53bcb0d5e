#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace liegate {

using Rational = boost::multiprecision::cpp_rational;

// s·1 + lin·z + ½ zᵀ quad z over symmetrized products, z = (x, p) or
// (x, y, p_x, p_y).  quad is the Hessian, so x̂p̂+p̂x̂ has quad(x,p) = 2.
class QuadraticObservable {
public:
  explicit QuadraticObservable(int dof = 1);

  int dof() const { return dof_; }
  int dim() const { return 2 * dof_; }

  const Rational& scal() const { return scal_; }
  const Rational& lin(int i) const { return lin_.at(i); }
  const Rational& quad(int i, int j) const { return quad_.at(i * dim() + j); }

  QuadraticObservable& set_scal(Rational v);
  QuadraticObservable& set_lin(int i, Rational v);
  // Writes both (i,j) and (j,i).
  QuadraticObservable& set_quad(int i, int j, Rational v);

  bool is_zero() const;
  friend bool operator==(const QuadraticObservable&, const QuadraticObservable&) = default;

  QuadraticObservable operator+(const QuadraticObservable& o) const;
  QuadraticObservable operator-(const QuadraticObservable& o) const;
  QuadraticObservable operator*(const Rational& k) const;

  // Flattened (scal, lin, upper triangle of quad).
  std::vector<Rational> coords() const;

  std::string str() const;

private:
  int dof_;
  Rational scal_{0};
  std::vector<Rational> lin_;
  std::vector<Rational> quad_;
};

enum class Algebra { LP, GHO, CP };

int algebra_size(Algebra alg);
int algebra_dof(Algebra alg);
const char* algebra_name(Algebra alg);

// λ_index with 1-based numbering: LP {1,x,p,p²}; GHO {1,x,p,x²,p²,xp+px};
// CP {1, x,p_x,x²,p_x²,xp_x+p_xx, y,p_y,y²,p_y²,yp_y+p_yy, L_z, xp_y+yp_x, xy, p_xp_y}.
QuadraticObservable generator(Algebra alg, int index);

// [A,B] = iħ·C; returns C.
QuadraticObservable commutator(const QuadraticObservable& a, const QuadraticObservable& b);

struct StructureEntry {
  int i, j, k;
  Rational c;
};

struct StructureTable {
  Algebra algebra;
  int n;
  std::vector<StructureEntry> entries;  // i < j, c != 0, sorted
  int pairs_checked = 0;

  // Any ordering of i, j; zero for absent triples.
  Rational c(int i, int j, int k) const;
};

// Coefficients of obs in the generator basis; ConsistencyError if outside the span.
std::vector<Rational> decompose(const QuadraticObservable& obs, Algebra alg);

StructureTable structure_constants(Algebra alg);

}  // namespace liegate
