#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace toric {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Mat<Integer>;
using IntVector = Vec<Integer>;
using RatMatrix = Mat<Rational>;
using RatVector = Vec<Rational>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  int rank = 0;
};

// U * A * V == D, D diagonal with d_1 | d_2 | ... and nonnegative entries.
SmithDecomposition smith_normal_form(const IntMatrix& A);

// Row-style Hermite normal form of the row lattice; zero rows dropped.
IntMatrix hermite_rows(const IntMatrix& A);

// Columns are a saturated lattice basis of {x : A x = 0}, in Hermite form.
IntMatrix integer_kernel_basis(const IntMatrix& A);

std::optional<RatVector> solve_rational(const IntMatrix& A, const RatVector& b);
std::optional<RatVector> solve_rational(const RatMatrix& A, const RatVector& b);

int rank(const RatMatrix& A);
int rank(const IntMatrix& A);
Integer determinant(const IntMatrix& A);
std::optional<RatMatrix> inverse(const RatMatrix& A);

// Reduced row echelon form, leftmost pivots. Returns pivot columns.
std::vector<int> rref(RatMatrix& A);

struct Feasibility {
  bool feasible = false;
  RatVector witness;
};

// Exists x with <g,x> > 0 for every strict g and <h,x> >= 0 for every nonstrict h.
Feasibility rational_feasible(const std::vector<RatVector>& strict,
                              const std::vector<RatVector>& nonstrict,
                              int ambient = -1);

// Exposed separately so tests can pin both engines against each other.
Feasibility feasible_fourier_motzkin(const std::vector<RatVector>& strict,
                                     const std::vector<RatVector>& nonstrict, int ambient);
Feasibility feasible_simplex(const std::vector<RatVector>& strict,
                             const std::vector<RatVector>& nonstrict, int ambient);

// Extreme rays and lineality of {y : <a_i, y> >= 0}.
struct ConeDescription {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};
ConeDescription double_description(const std::vector<IntVector>& inequalities, int ambient);

// --- small helpers ---

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

template <typename Derived>
Integer content(const Eigen::MatrixBase<Derived>& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, Integer(v(i)));
  return g;
}

IntVector primitive(const IntVector& v);
IntVector primitive(const RatVector& v);
RatVector to_rational(const IntVector& v);
RatMatrix to_rational(const IntMatrix& m);
bool is_integral(const RatVector& v);
IntVector to_integer(const RatVector& v);

template <typename DA, typename DB>
  requires std::is_same_v<typename DA::Scalar, typename DB::Scalar>
auto dot(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  S s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

template <typename DA, typename DB>
  requires std::is_same_v<typename DA::Scalar, Rational> && std::is_same_v<typename DB::Scalar, Integer>
Rational dot(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (b(i) != 0) s += a(i) * Rational(b(i));
  return s;
}

bool lex_less(const IntVector& a, const IntVector& b);
struct LexLess {
  bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};
bool equal(const IntVector& a, const IntVector& b);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);
std::string to_string(const Rational& q);

IntVector int_vector(std::initializer_list<long> xs);
RatVector rat_vector(std::initializer_list<Rational> xs);
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);
IntMatrix columns(const std::vector<IntVector>& cols, int rows);

}  // namespace toric
