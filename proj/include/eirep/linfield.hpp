#pragma once

// Exact arithmetic and linear algebra over finite fields F_{p^k}, plus the
// univariate polynomial factorization needed for idempotent splitting.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eirep {

// Field elements are encoded as integers in [0, p^k): the coefficient vector
// (c_0, ..., c_{k-1}) of the residue class modulo the field's modulus
// polynomial, packed in base p as c_0 + c_1*p + ... (ascending degree).
using FElem = std::uint32_t;

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic PRNG (splitmix64). Every randomized routine takes the seed
// explicitly so runs are reproducible.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

std::uint64_t default_seed();  // EIREP_SEED env var, default 0

class Field {
 public:
  // F_{p^k} with the lexicographically least monic irreducible modulus.
  explicit Field(std::int64_t p, int k = 1);

  std::int64_t characteristic() const { return p_; }
  int degree() const { return k_; }
  std::int64_t order() const { return q_; }

  FElem zero() const { return 0; }
  FElem one() const { return 1; }

  FElem add(FElem a, FElem b) const;
  FElem sub(FElem a, FElem b) const;
  FElem neg(FElem a) const;
  FElem mul(FElem a, FElem b) const;
  FElem inv(FElem a) const;  // throws FieldError("ZeroInverse") on 0
  FElem div(FElem a, FElem b) const { return mul(a, inv(b)); }
  FElem pow(FElem a, std::int64_t e) const;

  // Image of an integer under Z -> F_p -> F_{p^k}.
  FElem from_int(std::int64_t n) const;

  // Frobenius x -> x^{p^i} and its inverse.
  FElem frobenius(FElem a, int i = 1) const;
  FElem frobenius_inv(FElem a, int i = 1) const;

  bool in_prime_field(FElem a) const { return a < static_cast<FElem>(p_); }

  // Coefficients of the representative polynomial, ascending degree, length k.
  std::vector<std::int64_t> coeffs(FElem a) const;
  FElem from_coeffs(const std::vector<std::int64_t>& c) const;

  // A fixed primitive element (generator of the multiplicative group).
  FElem generator() const { return gen_; }

  // Modulus polynomial coefficients over F_p, ascending, length k+1 (monic).
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  bool same_as(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_;
  }

  std::string describe() const;  // "F_p" or "F_p^k"

 private:
  std::int64_t p_;
  int k_;
  std::int64_t q_;
  std::vector<std::int64_t> modulus_;
  FElem gen_ = 0;
  std::vector<FElem> exp_;         // exp_[i] = gen^i, i in [0, q-1)
  std::vector<std::int64_t> log_;  // log_[x] for x != 0

  FElem mul_slow(FElem a, FElem b) const;
};

// ---------------------------------------------------------------------------
// Polynomials over a Field: coefficient vectors, ascending degree, normalized
// so that the leading coefficient is nonzero (the zero polynomial is {}).

using Poly = std::vector<FElem>;

Poly poly_trim(Poly f);
int poly_deg(const Poly& f);  // -1 for the zero polynomial
Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, const Poly& a, FElem c);
// Division with remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);
Poly poly_mod(const Field& F, const Poly& a, const Poly& b);
Poly poly_gcd(const Field& F, Poly a, Poly b);  // monic gcd
Poly poly_monic(const Field& F, const Poly& a);
Poly poly_derivative(const Field& F, const Poly& a);
FElem poly_eval(const Field& F, const Poly& a, FElem x);
Poly poly_powmod(const Field& F, Poly base, std::uint64_t e, const Poly& mod);
bool poly_is_irreducible(const Field& F, const Poly& f);

// Full factorization into monic irreducibles with multiplicities; the product
// of the factors times the leading unit reproduces the input.
// Throws FieldError("ZeroPolynomial") on the zero polynomial.
std::vector<std::pair<Poly, int>> poly_factor(const Field& F, const Poly& f,
                                              Rng& rng);

// ---------------------------------------------------------------------------
// Dense matrices over a Field.

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FElem& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  FElem at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const std::vector<FElem>& data() const { return a_; }
  std::vector<FElem>& data() { return a_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_, cols_;
  std::vector<FElem> a_;
};

Matrix mat_add(const Field& F, const Matrix& a, const Matrix& b);
Matrix mat_sub(const Field& F, const Matrix& a, const Matrix& b);
Matrix mat_mul(const Field& F, const Matrix& a, const Matrix& b);
Matrix mat_scale(const Field& F, const Matrix& a, FElem c);
Matrix mat_transpose(const Matrix& a);
std::vector<FElem> mat_apply(const Field& F, const Matrix& a,
                             const std::vector<FElem>& v);

int mat_rank(const Field& F, Matrix a);
// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> mat_rref(const Field& F, Matrix& a);
// One solution of a x = b, or nullopt-like empty result (bool flag).
bool mat_solve(const Field& F, const Matrix& a, const std::vector<FElem>& b,
               std::vector<FElem>& solution);
std::vector<std::vector<FElem>> mat_nullspace(const Field& F, Matrix a);
bool mat_invert(const Field& F, const Matrix& a, Matrix& inverse);
FElem mat_det(const Field& F, Matrix a);
bool mat_is_zero(const Matrix& a);

// Characteristic polynomial (monic, ascending coefficients) via the
// Hessenberg recurrence; works over any field.
Poly mat_charpoly(const Field& F, const Matrix& a);
// Minimal polynomial via Krylov subspaces (lcm over standard basis vectors).
Poly mat_min_poly(const Field& F, const Matrix& a);

// Row-span basis of a list of vectors (each of the same length).
std::vector<std::vector<FElem>> span_basis(const Field& F,
                                           const std::vector<std::vector<FElem>>& vecs);
// Rank of the span.
int span_rank(const Field& F, const std::vector<std::vector<FElem>>& vecs);
// True if v lies in the span of basis (basis need not be reduced).
bool in_span(const Field& F, const std::vector<std::vector<FElem>>& vecs,
             const std::vector<FElem>& v);

}  // namespace eirep
