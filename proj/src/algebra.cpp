#include "eirep/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace eirep {

namespace {

// solve v = sum c_i basis_i; false if v is not in the span
bool coords_in(const Field& F, const std::vector<AlgElem>& basis, const AlgElem& v,
               std::vector<FElem>& coords) {
  if (basis.empty()) {
    for (FElem x : v)
      if (x != 0) return false;
    coords.clear();
    return true;
  }
  int n = static_cast<int>(v.size());
  Matrix m(n, static_cast<int>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    for (int i = 0; i < n; ++i) m.at(i, static_cast<int>(j)) = basis[j][static_cast<size_t>(i)];
  return mat_solve(F, m, v, coords);
}

}  // namespace

StructureAlgebra StructureAlgebra::make(std::shared_ptr<const Field> field,
                                        std::vector<std::string> basis,
                                        std::vector<std::vector<std::pair<int, FElem>>> table,
                                        AlgElem unit) {
  StructureAlgebra a;
  a.field_ = std::move(field);
  a.basis_ = std::move(basis);
  a.table_ = std::move(table);
  a.unit_ = std::move(unit);
  const int n = a.dim();
  if (a.table_.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
    throw AlgebraError("BadTable", "structure constant table has wrong size");
  if (static_cast<int>(a.unit_.size()) != n)
    throw AlgebraError("BadTable", "unit has wrong length");

  for (int i = 0; i < n; ++i) {
    AlgElem b = a.basis_elem(i);
    if (a.mul(a.unit_, b) != b || a.mul(b, a.unit_) != b)
      throw AlgebraError("NotUnital", "designated unit is not a two-sided identity");
  }
  for (int i = 0; i < n; ++i) {
    AlgElem bi = a.basis_elem(i);
    for (int j = 0; j < n; ++j) {
      AlgElem bij = a.mul(bi, a.basis_elem(j));
      for (int k = 0; k < n; ++k) {
        AlgElem right = a.mul(bi, a.mul(a.basis_elem(j), a.basis_elem(k)));
        AlgElem left = a.mul(bij, a.basis_elem(k));
        if (left != right)
          throw AlgebraError("NonAssociative",
                             "structure constants not associative at (" +
                                 a.basis_[static_cast<size_t>(i)] + ", " +
                                 a.basis_[static_cast<size_t>(j)] + ", " +
                                 a.basis_[static_cast<size_t>(k)] + ")");
      }
    }
  }
  return a;
}

AlgElem StructureAlgebra::basis_elem(int i) const {
  AlgElem v(basis_.size(), 0);
  v[static_cast<size_t>(i)] = 1;
  return v;
}

AlgElem StructureAlgebra::add(const AlgElem& a, const AlgElem& b) const {
  AlgElem out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = field_->add(a[i], b[i]);
  return out;
}

AlgElem StructureAlgebra::sub(const AlgElem& a, const AlgElem& b) const {
  AlgElem out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = field_->sub(a[i], b[i]);
  return out;
}

AlgElem StructureAlgebra::scale(const AlgElem& a, FElem c) const {
  AlgElem out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = field_->mul(a[i], c);
  return out;
}

AlgElem StructureAlgebra::mul(const AlgElem& a, const AlgElem& b) const {
  AlgElem out(basis_.size(), 0);
  const size_t n = basis_.size();
  for (size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      FElem c = field_->mul(a[i], b[j]);
      for (auto& [k, coeff] : table_[i * n + j])
        out[static_cast<size_t>(k)] =
            field_->add(out[static_cast<size_t>(k)], field_->mul(c, coeff));
    }
  }
  return out;
}

bool StructureAlgebra::is_zero(const AlgElem& a) const {
  for (FElem x : a)
    if (x != 0) return false;
  return true;
}

bool StructureAlgebra::is_idempotent(const AlgElem& a) const { return mul(a, a) == a; }

Matrix StructureAlgebra::left_mult_matrix(const AlgElem& a) const {
  const int n = dim();
  Matrix m(n, n);
  for (int j = 0; j < n; ++j) {
    AlgElem col = mul(a, basis_elem(j));
    for (int i = 0; i < n; ++i) m.at(i, j) = col[static_cast<size_t>(i)];
  }
  return m;
}

Matrix StructureAlgebra::right_mult_matrix(const AlgElem& a) const {
  const int n = dim();
  Matrix m(n, n);
  for (int j = 0; j < n; ++j) {
    AlgElem col = mul(basis_elem(j), a);
    for (int i = 0; i < n; ++i) m.at(i, j) = col[static_cast<size_t>(i)];
  }
  return m;
}

bool StructureAlgebra::constants_in_prime_field() const {
  for (auto& row : table_)
    for (auto& [k, c] : row) {
      (void)k;
      if (!field_->in_prime_field(c)) return false;
    }
  for (FElem c : unit_)
    if (!field_->in_prime_field(c)) return false;
  return true;
}

// ---------------------------------------------------------------------------

StructureAlgebra category_algebra(const FiniteCategory& c,
                                  std::shared_ptr<const Field> field) {
  const int n = c.morphism_count();
  std::vector<std::string> basis;
  for (int f = 0; f < n; ++f) basis.push_back(c.morphism_id(f));
  std::vector<std::vector<std::pair<int, FElem>>> table(static_cast<size_t>(n) *
                                                        static_cast<size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = c.compose(a, b);
      if (ab >= 0)
        table[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] = {
            {ab, 1}};
    }
  AlgElem unit(static_cast<size_t>(n), 0);
  for (int x = 0; x < c.object_count(); ++x) unit[static_cast<size_t>(c.identity(x))] = 1;
  auto alg = StructureAlgebra::make(std::move(field), std::move(basis), std::move(table),
                                    std::move(unit));
  std::map<std::string, AlgElem> units;
  for (int x = 0; x < c.object_count(); ++x) {
    AlgElem u(static_cast<size_t>(n), 0);
    u[static_cast<size_t>(c.identity(x))] = 1;
    units[c.object_id(x)] = u;
  }
  alg.set_object_units(std::move(units));
  return alg;
}

StructureAlgebra group_algebra(const CayleyTable& g, std::shared_ptr<const Field> field) {
  return category_algebra(group_category(g), std::move(field));
}

StructureAlgebra incidence_algebra(const ObjectPoset& p,
                                   std::shared_ptr<const Field> field) {
  std::vector<std::pair<int, int>> pairs;  // (x, y) with x <= y
  const int ne = static_cast<int>(p.elements.size());
  for (int x = 0; x < ne; ++x)
    for (int y = 0; y < ne; ++y)
      if (p.leq[static_cast<size_t>(x)][static_cast<size_t>(y)]) pairs.emplace_back(x, y);
  const int n = static_cast<int>(pairs.size());
  std::vector<std::string> basis;
  for (auto& [x, y] : pairs)
    basis.push_back("e[" + p.elements[static_cast<size_t>(x)] + "<=" +
                    p.elements[static_cast<size_t>(y)] + "]");
  auto pair_index = [&](int x, int y) {
    for (int i = 0; i < n; ++i)
      if (pairs[static_cast<size_t>(i)] == std::make_pair(x, y)) return i;
    return -1;
  };
  std::vector<std::vector<std::pair<int, FElem>>> table(static_cast<size_t>(n) *
                                                        static_cast<size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // e_{yz} * e_{xy} = e_{xz}; other products vanish
      auto [yb, z] = pairs[static_cast<size_t>(a)];
      auto [x, ya] = pairs[static_cast<size_t>(b)];
      if (ya == yb)
        table[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] = {
            {pair_index(x, z), 1}};
    }
  AlgElem unit(static_cast<size_t>(n), 0);
  for (int x = 0; x < ne; ++x) unit[static_cast<size_t>(pair_index(x, x))] = 1;
  auto alg = StructureAlgebra::make(std::move(field), std::move(basis), std::move(table),
                                    std::move(unit));
  std::map<std::string, AlgElem> units;
  for (int x = 0; x < ne; ++x) {
    AlgElem u(static_cast<size_t>(n), 0);
    u[static_cast<size_t>(pair_index(x, x))] = 1;
    units[p.elements[static_cast<size_t>(x)]] = u;
  }
  alg.set_object_units(std::move(units));
  return alg;
}

StructureAlgebra scalar_extend(const StructureAlgebra& a,
                               std::shared_ptr<const Field> bigger) {
  if (!a.constants_in_prime_field())
    throw AlgebraError("NonPrimeFieldConstants",
                       "scalar extension implemented for prime-field structure constants only");
  if (bigger->characteristic() != a.field().characteristic())
    throw AlgebraError("BadExtension", "characteristic mismatch");
  const int n = a.dim();
  std::vector<std::vector<std::pair<int, FElem>>> table(static_cast<size_t>(n) *
                                                        static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& [k, c] : a.basis_product(i, j))
        table[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)]
            .emplace_back(k, bigger->from_int(static_cast<std::int64_t>(c)));
  AlgElem unit(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    unit[static_cast<size_t>(i)] =
        bigger->from_int(static_cast<std::int64_t>(a.unit()[static_cast<size_t>(i)]));
  auto out = StructureAlgebra::make(bigger, a.basis(), std::move(table), std::move(unit));
  std::map<std::string, AlgElem> units;
  for (auto& [name, u] : a.object_units()) {
    AlgElem v(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      v[static_cast<size_t>(i)] =
          bigger->from_int(static_cast<std::int64_t>(u[static_cast<size_t>(i)]));
    units[name] = v;
  }
  out.set_object_units(std::move(units));
  return out;
}

// ---------------------------------------------------------------------------
// Radical: descending chain cut out by the characteristic polynomial
// coefficient forms e_{p^i} of the regular representation.

namespace {

FElem trace_of_left_mult(const StructureAlgebra& a, const AlgElem& z) {
  const Field& F = a.field();
  FElem t = 0;
  const size_t n = static_cast<size_t>(a.dim());
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      if (z[i] == 0) continue;
      for (auto& [k, c] : a.basis_product(static_cast<int>(i), static_cast<int>(j)))
        if (static_cast<size_t>(k) == j) t = F.add(t, F.mul(z[i], c));
    }
  return t;
}

// e_m of the left multiplication matrix: (-1)^m * coefficient of x^{n-m} in
// its characteristic polynomial
FElem elementary_symmetric_of_left_mult(const StructureAlgebra& a, const AlgElem& z,
                                        std::int64_t m) {
  const Field& F = a.field();
  Poly cp = mat_charpoly(F, a.left_mult_matrix(z));
  const int n = a.dim();
  FElem c = cp[static_cast<size_t>(n - m)];
  if (m % 2 == 1) c = F.neg(c);
  return c;
}

}  // namespace

std::vector<AlgElem> radical(const StructureAlgebra& a, int dim_bound) {
  const int n = a.dim();
  if (n > dim_bound)
    throw AlgebraError("DimensionBoundExceeded",
                       "dim " + std::to_string(n) + " exceeds bound " +
                           std::to_string(dim_bound));
  if (n == 0) return {};
  const Field& F = a.field();
  const std::int64_t p = F.characteristic();

  std::vector<AlgElem> v;  // current subspace, starts at A itself
  for (int i = 0; i < n; ++i) v.push_back(a.basis_elem(i));

  std::int64_t pi = 1;
  for (int step = 0; pi <= n; ++step, pi *= p) {
    if (v.empty()) break;
    const int m = static_cast<int>(v.size());
    // x = sum_j lambda_j v_j lies in the next stage iff for all t:
    //   sum_j lambda_j^{p^step} e_{p^step}(v_j v_t) = 0,
    // a linear system in mu_j = lambda_j^{p^step}.
    Matrix sys(m, m);
    for (int t = 0; t < m; ++t)
      for (int j = 0; j < m; ++j) {
        AlgElem prod = a.mul(v[static_cast<size_t>(j)], v[static_cast<size_t>(t)]);
        sys.at(t, j) = (pi == 1) ? trace_of_left_mult(a, prod)
                                 : elementary_symmetric_of_left_mult(a, prod, pi);
      }
    auto null_mu = mat_nullspace(F, sys);
    std::vector<AlgElem> next;
    for (auto& mu : null_mu) {
      AlgElem x(static_cast<size_t>(n), 0);
      for (int j = 0; j < m; ++j) {
        FElem lam = F.frobenius_inv(mu[static_cast<size_t>(j)], step);
        if (lam != 0) x = a.add(x, a.scale(v[static_cast<size_t>(j)], lam));
      }
      next.push_back(std::move(x));
    }
    v = span_basis(F, next);
  }
  return v;
}

std::vector<AlgElem> subspace_product(const StructureAlgebra& a,
                                      const std::vector<AlgElem>& u,
                                      const std::vector<AlgElem>& v) {
  std::vector<AlgElem> prods;
  for (auto& x : u)
    for (auto& y : v) prods.push_back(a.mul(x, y));
  return span_basis(a.field(), prods);
}

bool radical_certify(const StructureAlgebra& a, const std::vector<AlgElem>& rad,
                     std::uint64_t budget) {
  const Field& F = a.field();
  auto basis = span_basis(F, rad);
  // two-sided ideal
  for (int i = 0; i < a.dim(); ++i)
    for (auto& r : basis) {
      if (!in_span(F, basis, a.mul(a.basis_elem(i), r))) return false;
      if (!in_span(F, basis, a.mul(r, a.basis_elem(i)))) return false;
    }
  // nilpotent
  std::vector<AlgElem> power = basis;
  int steps = 0;
  while (!power.empty()) {
    power = subspace_product(a, power, basis);
    if (++steps > a.dim() + 1) return false;
  }
  // the quotient has no x != 0 with x (A/R) x = 0
  auto q = quotient_by_ideal(a, basis);
  const int d = q.algebra.dim();
  const std::uint64_t qsize = static_cast<std::uint64_t>(F.order());
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) {
    if (total > budget / qsize)
      throw AlgebraError("BudgetExceeded", "semisimplicity search too large");
    total *= qsize;
  }
  AlgElem x(static_cast<size_t>(d), 0);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t t = code;
    for (int i = 0; i < d; ++i) {
      x[static_cast<size_t>(i)] = static_cast<FElem>(t % qsize);
      t /= qsize;
    }
    bool annihilates = true;
    for (int b = 0; b < d && annihilates; ++b)
      annihilates =
          q.algebra.is_zero(q.algebra.mul(q.algebra.mul(x, q.algebra.basis_elem(b)), x));
    if (annihilates) return false;
  }
  return true;
}

QuotientAlgebra quotient_by_ideal(const StructureAlgebra& a,
                                  const std::vector<AlgElem>& ideal) {
  const Field& F = a.field();
  const int n = a.dim();
  QuotientAlgebra out;
  out.ideal_basis = span_basis(F, ideal);

  std::vector<AlgElem> current = out.ideal_basis;
  for (int i = 0; i < n; ++i) {
    AlgElem cand(static_cast<size_t>(n), 0);
    cand[static_cast<size_t>(i)] = 1;
    if (!in_span(F, current, cand)) {
      current.push_back(cand);
      out.rep_indices.push_back(i);
    }
  }
  const int d = static_cast<int>(out.rep_indices.size());

  std::vector<std::string> basis;
  for (int j = 0; j < d; ++j)
    basis.push_back(a.basis()[static_cast<size_t>(out.rep_indices[static_cast<size_t>(j)])]);
  std::vector<std::vector<std::pair<int, FElem>>> table(static_cast<size_t>(d) *
                                                        static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      AlgElem prod = a.mul(a.basis_elem(out.rep_indices[static_cast<size_t>(i)]),
                           a.basis_elem(out.rep_indices[static_cast<size_t>(j)]));
      AlgElem q = out.project(a, prod);
      for (int k = 0; k < d; ++k)
        if (q[static_cast<size_t>(k)] != 0)
          table[static_cast<size_t>(i) * static_cast<size_t>(d) + static_cast<size_t>(j)]
              .emplace_back(k, q[static_cast<size_t>(k)]);
    }
  AlgElem unit = out.project(a, a.unit());
  out.algebra = StructureAlgebra::make(a.field_ptr(), std::move(basis), std::move(table),
                                       std::move(unit));
  return out;
}

AlgElem QuotientAlgebra::project(const StructureAlgebra& ambient, const AlgElem& v) const {
  const Field& F = ambient.field();
  const int n = ambient.dim();
  const int r = static_cast<int>(ideal_basis.size());
  const int d = static_cast<int>(rep_indices.size());
  Matrix solvemat(n, r + d);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < n; ++i)
      solvemat.at(i, j) = ideal_basis[static_cast<size_t>(j)][static_cast<size_t>(i)];
  for (int j = 0; j < d; ++j) solvemat.at(rep_indices[static_cast<size_t>(j)], r + j) = 1;
  std::vector<FElem> sol;
  if (!mat_solve(F, solvemat, v, sol))
    throw AlgebraError("Internal", "projection solve failed");
  AlgElem q(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j) q[static_cast<size_t>(j)] = sol[static_cast<size_t>(r + j)];
  return q;
}

AlgElem QuotientAlgebra::lift(const StructureAlgebra& ambient, const AlgElem& v) const {
  AlgElem out(static_cast<size_t>(ambient.dim()), 0);
  for (size_t j = 0; j < rep_indices.size(); ++j)
    out[static_cast<size_t>(rep_indices[j])] = v[j];
  return out;
}

// ---------------------------------------------------------------------------
// Idempotents

namespace {

struct Subalgebra {
  StructureAlgebra alg;
  std::vector<AlgElem> embedding;  // basis vectors in ambient coordinates

  AlgElem to_ambient(const StructureAlgebra& ambient, const AlgElem& v) const {
    AlgElem out(static_cast<size_t>(ambient.dim()), 0);
    for (size_t j = 0; j < embedding.size(); ++j)
      if (v[j] != 0) out = ambient.add(out, ambient.scale(embedding[j], v[j]));
    return out;
  }
};

Subalgebra subalgebra_on(const StructureAlgebra& ambient, std::vector<AlgElem> vectors,
                         const AlgElem& unit, const std::string& label_prefix) {
  const Field& F = ambient.field();
  Subalgebra out;
  out.embedding = span_basis(F, vectors);
  const int d = static_cast<int>(out.embedding.size());
  std::vector<std::string> basis;
  for (int i = 0; i < d; ++i) basis.push_back(label_prefix + std::to_string(i));
  std::vector<std::vector<std::pair<int, FElem>>> table(static_cast<size_t>(d) *
                                                        static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      AlgElem prod = ambient.mul(out.embedding[static_cast<size_t>(i)],
                                 out.embedding[static_cast<size_t>(j)]);
      std::vector<FElem> c;
      if (!coords_in(F, out.embedding, prod, c))
        throw AlgebraError("Internal", "subalgebra not closed under multiplication");
      for (int k = 0; k < d; ++k)
        if (c[static_cast<size_t>(k)] != 0)
          table[static_cast<size_t>(i) * static_cast<size_t>(d) + static_cast<size_t>(j)]
              .emplace_back(k, c[static_cast<size_t>(k)]);
    }
  std::vector<FElem> unit_c;
  if (!coords_in(F, out.embedding, unit, unit_c))
    throw AlgebraError("Internal", "designated unit not inside subalgebra");
  out.alg = StructureAlgebra::make(ambient.field_ptr(), std::move(basis), std::move(table),
                                   std::move(unit_c));
  return out;
}

Subalgebra corner_algebra(const StructureAlgebra& a, const AlgElem& e) {
  std::vector<AlgElem> vecs;
  for (int i = 0; i < a.dim(); ++i) vecs.push_back(a.mul(e, a.mul(a.basis_elem(i), e)));
  return subalgebra_on(a, std::move(vecs), e, "c");
}

Poly element_min_poly(const StructureAlgebra& b, const AlgElem& z) {
  const Field& F = b.field();
  std::vector<AlgElem> powers = {b.unit()};
  while (true) {
    std::vector<AlgElem> lower(powers.begin(), powers.end() - 1);
    if (in_span(F, lower, powers.back())) {
      std::vector<FElem> c;
      if (!coords_in(F, lower, powers.back(), c))
        throw AlgebraError("Internal", "min poly solve failed");
      Poly out(powers.size(), 0);
      out.back() = 1;
      for (size_t i = 0; i + 1 < powers.size(); ++i) out[i] = F.neg(i < c.size() ? c[i] : 0);
      return out;
    }
    powers.push_back(b.mul(powers.back(), z));
  }
}

// extended gcd over F[x]: g = gcd(a, b) monic, g = u a + v b
void poly_extgcd(const Field& F, Poly a, Poly b, Poly& g, Poly& u, Poly& v) {
  Poly u0 = {1}, v0 = {}, u1 = {}, v1 = {1};
  while (!b.empty()) {
    auto [q, r] = poly_divmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
    Poly u2 = poly_sub(F, u0, poly_mul(F, q, u1));
    Poly v2 = poly_sub(F, v0, poly_mul(F, q, v1));
    u0 = std::move(u1);
    v0 = std::move(v1);
    u1 = std::move(u2);
    v1 = std::move(v2);
  }
  if (a.empty()) {
    g.clear();
    u.clear();
    v.clear();
    return;
  }
  FElem lead = F.inv(a.back());
  g = poly_scale(F, a, lead);
  u = poly_scale(F, u0, lead);
  v = poly_scale(F, v0, lead);
}

AlgElem evaluate_poly(const StructureAlgebra& b, const Poly& f, const AlgElem& z) {
  AlgElem acc = b.zero();
  for (size_t i = f.size(); i-- > 0;) {
    acc = b.mul(acc, z);
    if (f[i] != 0) acc = b.add(acc, b.scale(b.unit(), f[i]));
  }
  return acc;
}

struct SemisimpleDecomposition {
  std::vector<AlgElem> idempotents;  // primitive orthogonal, sum = 1
  std::vector<int> corner_dim;       // dim of eSe = division-ring degree
};

SemisimpleDecomposition semisimple_primitive_idempotents(const StructureAlgebra& s,
                                                         Rng& rng) {
  const Field& F = s.field();
  SemisimpleDecomposition out;
  if (s.dim() == 0) return out;
  std::vector<AlgElem> pending = {s.unit()};

  while (!pending.empty()) {
    AlgElem e = pending.back();
    pending.pop_back();
    Subalgebra corner = corner_algebra(s, e);
    const int d = corner.alg.dim();
    if (d == 1) {
      out.idempotents.push_back(e);
      out.corner_dim.push_back(1);
      continue;
    }

    std::vector<AlgElem> candidates;
    for (int i = 0; i < d; ++i) candidates.push_back(corner.alg.basis_elem(i));
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        candidates.push_back(
            corner.alg.add(corner.alg.basis_elem(i), corner.alg.basis_elem(j)));
    for (int t = 0; t < 256; ++t) {
      AlgElem r(static_cast<size_t>(d));
      for (auto& x : r) x = static_cast<FElem>(rng.below(static_cast<std::uint64_t>(F.order())));
      candidates.push_back(std::move(r));
    }
    std::uint64_t total = 1;
    bool enumerable = true;
    for (int i = 0; i < d; ++i) {
      total *= static_cast<std::uint64_t>(F.order());
      if (total > (1ULL << 20)) {
        enumerable = false;
        break;
      }
    }
    if (enumerable)
      for (std::uint64_t code = 1; code < total; ++code) {
        AlgElem r(static_cast<size_t>(d));
        std::uint64_t t = code;
        for (int i = 0; i < d; ++i) {
          r[static_cast<size_t>(i)] =
              static_cast<FElem>(t % static_cast<std::uint64_t>(F.order()));
          t /= static_cast<std::uint64_t>(F.order());
        }
        candidates.push_back(std::move(r));
      }

    bool decided = false;
    for (auto& z : candidates) {
      Poly mp = element_min_poly(corner.alg, z);
      auto factors = poly_factor(F, mp, rng);
      if (factors.size() >= 2) {
        Poly big_g = {1};
        for (int t = 0; t < factors[0].second; ++t)
          big_g = poly_mul(F, big_g, factors[0].first);
        Poly big_h = {1};
        for (size_t i = 1; i < factors.size(); ++i)
          for (int t = 0; t < factors[i].second; ++t)
            big_h = poly_mul(F, big_h, factors[i].first);
        Poly g, u, v;
        poly_extgcd(F, big_g, big_h, g, u, v);
        if (poly_deg(g) != 0) continue;
        Poly ug = poly_mod(F, poly_mul(F, u, big_g), mp);
        AlgElem eps_corner = evaluate_poly(corner.alg, ug, z);
        AlgElem eps = corner.to_ambient(s, eps_corner);
        if (s.is_zero(eps) || eps == e || !s.is_idempotent(eps)) continue;
        pending.push_back(eps);
        pending.push_back(s.sub(e, eps));
        decided = true;
        break;
      }
      if (factors.size() == 1 && factors[0].second == 1 && poly_deg(factors[0].first) == d) {
        out.idempotents.push_back(e);  // corner is the field F_{q^d}
        out.corner_dim.push_back(d);
        decided = true;
        break;
      }
    }
    if (!decided)
      throw AlgebraError("SplitSearchExceeded",
                         "no splitting element found in a semisimple corner");
  }
  return out;
}

// Newton lift x -> 3x^2 - 2x^3 squares precision modulo the radical in every
// characteristic.
AlgElem newton_lift_idempotent(const StructureAlgebra& a, AlgElem x, int max_iter) {
  const Field& F = a.field();
  FElem three = F.from_int(3), two = F.from_int(2);
  for (int it = 0; it < max_iter; ++it) {
    if (a.is_idempotent(x)) return x;
    AlgElem x2 = a.mul(x, x);
    AlgElem x3 = a.mul(x2, x);
    x = a.sub(a.scale(x2, three), a.scale(x3, two));
  }
  if (!a.is_idempotent(x))
    throw AlgebraError("Internal", "idempotent lifting did not converge");
  return x;
}

struct DecompositionCore {
  std::vector<AlgElem> idempotents;
  std::vector<int> corner_dim;
  std::vector<AlgElem> semisimple_images;  // quotient coordinates
  QuotientAlgebra quotient;
};

DecompositionCore decompose_core(const StructureAlgebra& a, Rng& rng) {
  DecompositionCore core;
  auto rad = radical(a);
  core.quotient = quotient_by_ideal(a, rad);
  const StructureAlgebra& s = core.quotient.algebra;
  auto ss = semisimple_primitive_idempotents(s, rng);
  core.corner_dim = ss.corner_dim;
  core.semisimple_images = ss.idempotents;

  AlgElem f = a.unit();
  const int r = static_cast<int>(ss.idempotents.size());
  for (int i = 0; i < r; ++i) {
    AlgElem e;
    if (i + 1 == r) {
      e = f;
    } else {
      AlgElem x = core.quotient.lift(a, ss.idempotents[static_cast<size_t>(i)]);
      x = a.mul(f, a.mul(x, f));
      e = newton_lift_idempotent(a, std::move(x), 64);
    }
    core.idempotents.push_back(e);
    f = a.sub(f, e);
  }
  AlgElem sum = a.zero();
  for (auto& e : core.idempotents) {
    if (!a.is_idempotent(e)) throw AlgebraError("Internal", "lifted element not idempotent");
    sum = a.add(sum, e);
  }
  if (sum != a.unit()) throw AlgebraError("Internal", "idempotents do not sum to 1");
  for (size_t i = 0; i < core.idempotents.size(); ++i)
    for (size_t j = 0; j < core.idempotents.size(); ++j) {
      if (i == j) continue;
      if (!a.is_zero(a.mul(core.idempotents[i], core.idempotents[j])))
        throw AlgebraError("Internal", "idempotents not orthogonal");
    }
  for (size_t i = 0; i < core.idempotents.size(); ++i)
    if (core.quotient.project(a, core.idempotents[i]) != core.semisimple_images[i])
      throw AlgebraError("Internal", "lift does not reduce to its semisimple image");
  return core;
}

}  // namespace

IdempotentDecomposition primitive_idempotents(const StructureAlgebra& a,
                                              std::uint64_t seed) {
  StructureAlgebra current = a;
  int extension = 1;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Rng rng(seed);
    DecompositionCore core = decompose_core(current, rng);
    int lcm = 1;
    for (int d : core.corner_dim) lcm = static_cast<int>(std::lcm(lcm, d));
    if (lcm > 1) {
      if (!a.constants_in_prime_field())
        throw AlgebraError("NonSplitSemisimpleQuotient",
                           "semisimple quotient needs an extension of degree " +
                               std::to_string(lcm) +
                               " and structure constants are not prime-field");
      extension *= lcm;
      auto big = std::make_shared<Field>(a.field().characteristic(),
                                         a.field().degree() * extension);
      current = scalar_extend(a, big);
      continue;
    }

    IdempotentDecomposition out;
    out.algebra = current;
    out.idempotents = core.idempotents;
    out.extension_degree = extension;

    const StructureAlgebra& s = core.quotient.algebra;
    const int r = static_cast<int>(out.idempotents.size());
    std::vector<int> cls(static_cast<size_t>(r), -1);
    int nc = 0;
    for (int i = 0; i < r; ++i) {
      if (cls[static_cast<size_t>(i)] >= 0) continue;
      cls[static_cast<size_t>(i)] = nc;
      for (int j = i + 1; j < r; ++j) {
        if (cls[static_cast<size_t>(j)] >= 0) continue;
        bool linked = false;
        for (int b = 0; b < s.dim() && !linked; ++b) {
          AlgElem prod =
              s.mul(core.semisimple_images[static_cast<size_t>(i)],
                    s.mul(s.basis_elem(b), core.semisimple_images[static_cast<size_t>(j)]));
          linked = !s.is_zero(prod);
        }
        if (linked) cls[static_cast<size_t>(j)] = nc;
      }
      ++nc;
    }
    out.simple_class = cls;
    out.class_count = nc;

    if (!current.object_units().empty()) {
      out.class_object.assign(static_cast<size_t>(nc), "");
      for (int i = 0; i < r; ++i)
        for (auto& [obj, ux] : current.object_units()) {
          AlgElem img = core.quotient.project(current, ux);
          if (!s.is_zero(s.mul(core.semisimple_images[static_cast<size_t>(i)], img))) {
            out.class_object[static_cast<size_t>(cls[static_cast<size_t>(i)])] = obj;
            break;
          }
        }
    }
    return out;
  }
  throw AlgebraError("NonSplitSemisimpleQuotient", "extension retry limit reached");
}

std::vector<AlgElem> primitive_idempotents_nosplit(const StructureAlgebra& a,
                                                   std::uint64_t seed) {
  Rng rng(seed);
  return decompose_core(a, rng).idempotents;
}

bool is_local_algebra(const StructureAlgebra& a, std::uint64_t seed) {
  if (a.dim() == 0) return false;
  return primitive_idempotents_nosplit(a, seed).size() == 1;
}

BlockDecomposition block_decomposition(const StructureAlgebra& a, std::uint64_t seed) {
  const Field& F = a.field();
  const int n = a.dim();
  Matrix sys(n * n, n);
  for (int i = 0; i < n; ++i) {
    Matrix li = a.left_mult_matrix(a.basis_elem(i));
    Matrix ri = a.right_mult_matrix(a.basis_elem(i));
    // b_i z - z b_i = (L_{b_i} - R_{b_i}) z as a function of z's coordinates
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) sys.at(i * n + r, c) = F.sub(li.at(r, c), ri.at(r, c));
  }
  auto center_basis = mat_nullspace(F, sys);
  Subalgebra z = subalgebra_on(a, center_basis, a.unit(), "z");

  // primitive idempotents of the commutative center; no splitting-field
  // requirement, blocks are rational over the base field
  Rng rng(seed);
  DecompositionCore core = decompose_core(z.alg, rng);

  BlockDecomposition out;
  for (auto& e_z : core.idempotents)
    out.central_idempotents.push_back(z.to_ambient(a, e_z));
  std::sort(out.central_idempotents.begin(), out.central_idempotents.end());
  for (auto& c : out.central_idempotents) {
    std::vector<AlgElem> vecs;
    for (int i = 0; i < n; ++i) vecs.push_back(a.mul(c, a.basis_elem(i)));
    Subalgebra blk = subalgebra_on(a, std::move(vecs), c, "b");
    // carry object-unit attribution into blocks where it stays idempotent
    std::map<std::string, AlgElem> units;
    for (auto& [obj, ux] : a.object_units()) {
      AlgElem cut = a.mul(c, ux);
      if (a.is_zero(cut)) continue;
      std::vector<FElem> coords;
      if (coords_in(F, blk.embedding, cut, coords)) units[obj] = coords;
    }
    blk.alg.set_object_units(std::move(units));
    out.block_embeddings.push_back(blk.embedding);
    out.blocks.push_back(std::move(blk.alg));
  }
  return out;
}

// ---------------------------------------------------------------------------

ExtQuiver ext_quiver(const IdempotentDecomposition& dec) {
  const StructureAlgebra& a = dec.algebra;
  const Field& F = a.field();
  auto rad = radical(a);
  auto rad2 = subspace_product(a, rad, rad);

  ExtQuiver q;
  q.extension_degree = dec.extension_degree;
  const int nc = dec.class_count;
  q.vertices.resize(static_cast<size_t>(nc));
  for (int i = 0; i < nc; ++i) q.vertices[static_cast<size_t>(i)] = "s" + std::to_string(i);
  q.vertex_object = dec.class_object;
  if (q.vertex_object.empty()) q.vertex_object.assign(static_cast<size_t>(nc), "");
  q.arrows.assign(static_cast<size_t>(nc), std::vector<int>(static_cast<size_t>(nc), 0));

  std::vector<int> rep(static_cast<size_t>(nc), -1);
  for (size_t i = 0; i < dec.idempotents.size(); ++i)
    if (rep[static_cast<size_t>(dec.simple_class[i])] < 0)
      rep[static_cast<size_t>(dec.simple_class[i])] = static_cast<int>(i);

  const int r2 = span_rank(F, rad2);
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j) {
      const AlgElem& ei = dec.idempotents[static_cast<size_t>(rep[static_cast<size_t>(i)])];
      const AlgElem& ej = dec.idempotents[static_cast<size_t>(rep[static_cast<size_t>(j)])];
      std::vector<AlgElem> fiber = rad2;
      for (auto& r : rad) fiber.push_back(a.mul(ej, a.mul(r, ei)));
      q.arrows[static_cast<size_t>(i)][static_cast<size_t>(j)] = span_rank(F, fiber) - r2;
    }
  return q;
}

ExtQuiver ext_quiver(const StructureAlgebra& a, std::uint64_t seed) {
  return ext_quiver(primitive_idempotents(a, seed));
}

// ---------------------------------------------------------------------------
// Group helpers

int group_simple_count(const CayleyTable& g, std::int64_t p) {
  g.validate();
  const int n = g.order();
  std::vector<int> cls(static_cast<size_t>(n), -1);
  int nc = 0;
  int count = 0;
  for (int a = 0; a < n; ++a) {
    if (cls[static_cast<size_t>(a)] >= 0) continue;
    bool p_regular = (p <= 0) || (g.element_order(a) % p != 0);
    for (int t = 0; t < n; ++t) {
      int ta = g.table[static_cast<size_t>(t)][static_cast<size_t>(a)];
      int conj = g.table[static_cast<size_t>(ta)][static_cast<size_t>(g.inverse_of(t))];
      cls[static_cast<size_t>(conj)] = nc;
    }
    ++nc;
    if (p_regular) ++count;
  }
  return count;
}

bool is_trivial_or_p_group(const CayleyTable& g, std::int64_t p) {
  int n = g.order();
  if (n == 1) return true;
  if (p <= 1) return false;
  while (n % p == 0) n /= static_cast<int>(p);
  return n == 1;
}

bool sylow_p_cyclic(const CayleyTable& g, std::int64_t p) {
  g.validate();
  if (p <= 1) return true;
  int n = g.order();
  int ppart = 1;
  while (n % p == 0) {
    n /= static_cast<int>(p);
    ppart *= static_cast<int>(p);
  }
  if (ppart == 1) return true;
  // cyclic Sylow p-subgroup <=> an element of order ppart exists
  for (int a = 0; a < g.order(); ++a)
    if (g.element_order(a) == ppart) return true;
  return false;
}

bool group_algebra_finite_type(const CayleyTable& g, std::int64_t p) {
  if (p <= 0) return true;
  if (g.order() % p != 0) return true;
  return sylow_p_cyclic(g, p);
}

}  // namespace eirep
