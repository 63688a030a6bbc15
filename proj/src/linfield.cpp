#include "eirep/linfield.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace eirep {

std::uint64_t default_seed() {
  if (const char* s = std::getenv("EIREP_SEED")) {
    return std::strtoull(s, nullptr, 10);
  }
  return 0;
}

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over the prime field, coefficients in [0,p), ascending degree.
using PPoly = std::vector<std::int64_t>;

PPoly ppoly_trim(PPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

PPoly ppoly_mod(std::int64_t p, PPoly a, const PPoly& b) {
  a = ppoly_trim(std::move(a));
  const int db = static_cast<int>(b.size()) - 1;
  std::int64_t lead_inv = 1;
  {  // inverse of b's leading coefficient mod p
    std::int64_t lb = b.back() % p;
    for (std::int64_t x = 1; x < p; ++x)
      if (lb * x % p == 1) { lead_inv = x; break; }
  }
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    std::int64_t c = a.back() * lead_inv % p;
    int shift = static_cast<int>(a.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) {
      a[i + shift] = ((a[i + shift] - c * b[i]) % p + p * p) % p;
    }
    a = ppoly_trim(std::move(a));
  }
  return a;
}

PPoly ppoly_mulmod(std::int64_t p, const PPoly& a, const PPoly& b, const PPoly& m) {
  PPoly prod(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return ppoly_mod(p, std::move(prod), m);
}

bool ppoly_has_root(std::int64_t p, const PPoly& f) {
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t v = 0, xp = 1;
    for (std::int64_t c : f) {
      v = (v + c * xp) % p;
      xp = xp * x % p;
    }
    if (v == 0) return true;
  }
  return false;
}

// Trial-division irreducibility over F_p: enough for the tiny moduli here.
bool ppoly_irreducible(std::int64_t p, const PPoly& f) {
  int d = static_cast<int>(f.size()) - 1;
  if (d <= 0) return false;
  if (d == 1) return true;
  if (ppoly_has_root(p, f)) return false;
  if (d <= 3) return true;  // no root and degree <= 3 => irreducible
  // enumerate monic divisor candidates of degree 2..d/2
  for (int dd = 2; dd <= d / 2; ++dd) {
    std::int64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      PPoly g(dd + 1, 0);
      std::int64_t t = idx;
      for (int i = 0; i < dd; ++i) { g[i] = t % p; t /= p; }
      g[dd] = 1;
      if (ppoly_trim(ppoly_mod(p, f, g)).empty()) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Field::Field(std::int64_t p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw FieldError("NotPrime: characteristic must be prime");
  if (k < 1) throw FieldError("field degree must be >= 1");
  q_ = 1;
  for (int i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > (1 << 20)) throw FieldError("field too large (p^k > 2^20)");
  }
  // lexicographically least monic irreducible modulus of degree k: interpret
  // the non-leading coefficients as a base-p number and take the smallest.
  if (k == 1) {
    modulus_ = {0, 1};  // x
  } else {
    bool found = false;
    for (std::int64_t idx = 0; idx < q_ && !found; ++idx) {
      PPoly f(k + 1, 0);
      std::int64_t t = idx;
      for (int i = 0; i < k; ++i) { f[i] = t % p; t /= p; }
      f[k] = 1;
      if (ppoly_irreducible(p, f)) {
        modulus_ = f;
        found = true;
      }
    }
    if (!found) throw FieldError("no irreducible modulus found");  // unreachable
  }

  // Find a primitive element and build exp/log tables.
  exp_.assign(static_cast<size_t>(q_ - 1), 0);
  log_.assign(static_cast<size_t>(q_), -1);
  auto factors = prime_factors(q_ - 1);
  for (FElem g = 1; g < static_cast<FElem>(q_); ++g) {
    if (q_ == 2) { gen_ = 1; break; }
    bool primitive = true;
    for (std::int64_t f : factors) {
      // g^((q-1)/f) == 1 ?
      std::int64_t e = (q_ - 1) / f;
      FElem acc = 1, base = g;
      while (e) {
        if (e & 1) acc = mul_slow(acc, base);
        base = mul_slow(base, base);
        e >>= 1;
      }
      if (acc == 1) { primitive = false; break; }
    }
    if (primitive) { gen_ = g; break; }
  }
  FElem cur = 1;
  for (std::int64_t i = 0; i < q_ - 1; ++i) {
    exp_[static_cast<size_t>(i)] = cur;
    log_[cur] = i;
    cur = mul_slow(cur, gen_);
  }
}

FElem Field::add(FElem a, FElem b) const {
  if (p_ == 2) return a ^ b;
  FElem out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    std::int64_t da = (a / mult) % p_, db = (b / mult) % p_;
    out += static_cast<FElem>((da + db) % p_) * mult;
    mult *= static_cast<FElem>(p_);
  }
  return out;
}

FElem Field::neg(FElem a) const {
  if (p_ == 2) return a;
  FElem out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    std::int64_t da = (a / mult) % p_;
    out += static_cast<FElem>((p_ - da) % p_) * mult;
    mult *= static_cast<FElem>(p_);
  }
  return out;
}

FElem Field::sub(FElem a, FElem b) const { return add(a, neg(b)); }

FElem Field::mul_slow(FElem a, FElem b) const {
  // plain polynomial multiplication modulo the modulus
  std::vector<std::int64_t> ca(k_), cb(k_);
  {
    FElem ta = a, tb = b;
    for (int i = 0; i < k_; ++i) {
      ca[i] = ta % p_; ta /= static_cast<FElem>(p_);
      cb[i] = tb % p_; tb /= static_cast<FElem>(p_);
    }
  }
  std::vector<std::int64_t> prod(2 * k_, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  // reduce modulo modulus_ (monic)
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    std::int64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k_; ++i) {
      prod[d - k_ + i] = ((prod[d - k_ + i] - c * modulus_[i]) % p_ + p_ * p_) % p_;
    }
  }
  FElem out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += static_cast<FElem>(prod[i]) * mult;
    mult *= static_cast<FElem>(p_);
  }
  return out;
}

FElem Field::mul(FElem a, FElem b) const {
  if (a == 0 || b == 0) return 0;
  std::int64_t l = log_[a] + log_[b];
  if (l >= q_ - 1) l -= q_ - 1;
  return exp_[static_cast<size_t>(l)];
}

FElem Field::inv(FElem a) const {
  if (a == 0) throw FieldError("ZeroInverse");
  std::int64_t l = (q_ - 1 - log_[a]) % (q_ - 1);
  return exp_[static_cast<size_t>(l)];
}

FElem Field::pow(FElem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw FieldError("ZeroInverse");
    return e == 0 ? 1 : 0;
  }
  std::int64_t l = log_[a] % (q_ - 1);
  std::int64_t m = ((e % (q_ - 1)) * (l % (q_ - 1))) % (q_ - 1);
  if (m < 0) m += q_ - 1;
  return exp_[static_cast<size_t>(m)];
}

FElem Field::from_int(std::int64_t n) const {
  std::int64_t r = n % p_;
  if (r < 0) r += p_;
  return static_cast<FElem>(r);
}

FElem Field::frobenius(FElem a, int i) const {
  int steps = ((i % k_) + k_) % k_;
  FElem out = a;
  for (int t = 0; t < steps; ++t) out = pow(out, p_);
  return out;
}

FElem Field::frobenius_inv(FElem a, int i) const {
  int steps = ((i % k_) + k_) % k_;
  return frobenius(a, (k_ - steps) % k_);
}

std::vector<std::int64_t> Field::coeffs(FElem a) const {
  std::vector<std::int64_t> c(k_);
  for (int i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= static_cast<FElem>(p_);
  }
  return c;
}

FElem Field::from_coeffs(const std::vector<std::int64_t>& c) const {
  FElem out = 0, mult = 1;
  for (int i = 0; i < k_ && i < static_cast<int>(c.size()); ++i) {
    std::int64_t d = c[i] % p_;
    if (d < 0) d += p_;
    out += static_cast<FElem>(d) * mult;
    mult *= static_cast<FElem>(p_);
  }
  return out;
}

std::string Field::describe() const {
  if (k_ == 1) return "F_" + std::to_string(p_);
  return "F_" + std::to_string(p_) + "^" + std::to_string(k_);
}

// ---------------------------------------------------------------------------
// Polynomials

Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    FElem x = i < a.size() ? a[i] : 0;
    FElem y = i < b.size() ? b[i] : 0;
    out[i] = F.add(x, y);
  }
  return poly_trim(std::move(out));
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    FElem x = i < a.size() ? a[i] : 0;
    FElem y = i < b.size() ? b[i] : 0;
    out[i] = F.sub(x, y);
  }
  return poly_trim(std::move(out));
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  return poly_trim(std::move(out));
}

Poly poly_scale(const Field& F, const Poly& a, FElem c) {
  Poly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], c);
  return poly_trim(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw FieldError("polynomial division by zero");
  Poly rem = a, quot;
  int db = poly_deg(b);
  FElem linv = F.inv(b.back());
  if (poly_deg(rem) >= db) quot.assign(rem.size() - b.size() + 1, 0);
  while (poly_deg(rem) >= db) {
    int shift = poly_deg(rem) - db;
    FElem c = F.mul(rem.back(), linv);
    quot[shift] = c;
    for (int i = 0; i <= db; ++i)
      rem[i + shift] = F.sub(rem[i + shift], F.mul(c, b[i]));
    rem = poly_trim(std::move(rem));
  }
  return {poly_trim(std::move(quot)), rem};
}

Poly poly_mod(const Field& F, const Poly& a, const Poly& b) {
  return poly_divmod(F, a, b).second;
}

Poly poly_monic(const Field& F, const Poly& a) {
  if (a.empty()) return a;
  return poly_scale(F, a, F.inv(a.back()));
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

Poly poly_derivative(const Field& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    out[i - 1] = F.mul(a[i], F.from_int(static_cast<std::int64_t>(i)));
  return poly_trim(std::move(out));
}

FElem poly_eval(const Field& F, const Poly& a, FElem x) {
  FElem v = 0;
  for (size_t i = a.size(); i-- > 0;) v = F.add(F.mul(v, x), a[i]);
  return v;
}

Poly poly_powmod(const Field& F, Poly base, std::uint64_t e, const Poly& mod) {
  Poly result = {1};
  base = poly_mod(F, base, mod);
  while (e) {
    if (e & 1) result = poly_mod(F, poly_mul(F, result, base), mod);
    base = poly_mod(F, poly_mul(F, base, base), mod);
    e >>= 1;
  }
  return result;
}

bool poly_is_irreducible(const Field& F, const Poly& f) {
  int d = poly_deg(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  // x^{q^i} - x tests: f irreducible iff gcd(f, x^{q^i}-x) trivial for i < d
  // and x^{q^d} = x mod f.
  std::uint64_t q = static_cast<std::uint64_t>(F.order());
  Poly x = {0, 1};
  Poly xq = x;
  for (int i = 1; i <= d; ++i) {
    xq = poly_powmod(F, xq, q, f);
    Poly diff = poly_sub(F, xq, x);
    if (i < d) {
      if (i <= d / 2) {
        Poly g = poly_gcd(F, f, diff);
        if (poly_deg(g) > 0) return false;
      }
    } else {
      if (!diff.empty()) return false;
    }
  }
  return true;
}

namespace {

// p-th root in F_{p^k}: c -> c^{p^{k-1}}.
FElem pth_root(const Field& F, FElem c) {
  return F.frobenius(c, F.degree() - 1);
}

// Squarefree decomposition: returns pairs (g, m) with f = prod g^m (up to
// unit), each g squarefree; handles the f' = 0 (p-th power) case.
void squarefree_decompose(const Field& F, Poly f, int mult,
                          std::vector<std::pair<Poly, int>>& out) {
  f = poly_monic(F, f);
  if (poly_deg(f) <= 0) return;
  Poly d = poly_derivative(F, f);
  if (d.empty()) {
    // f = g(x^p): take p-th root of coefficients
    std::int64_t p = F.characteristic();
    Poly g((f.size() - 1) / static_cast<size_t>(p) + 1, 0);
    for (size_t i = 0; i < f.size(); i += static_cast<size_t>(p))
      g[i / static_cast<size_t>(p)] = pth_root(F, f[i]);
    squarefree_decompose(F, g, mult * static_cast<int>(p), out);
    return;
  }
  Poly c = poly_gcd(F, f, d);
  Poly w = poly_divmod(F, f, c).first;  // product of squarefree part
  int i = 1;
  while (poly_deg(w) > 0) {
    Poly y = poly_gcd(F, w, c);
    Poly fac = poly_divmod(F, w, y).first;
    if (poly_deg(fac) > 0) out.emplace_back(poly_monic(F, fac), mult * i);
    w = y;
    c = poly_divmod(F, c, y).first;
    ++i;
  }
  if (poly_deg(c) > 0) squarefree_decompose(F, c, mult, out);
}

// Equal-degree splitting (Cantor–Zassenhaus) of a squarefree f that is a
// product of irreducibles all of degree d.
void equal_degree_split(const Field& F, const Poly& f, int d, Rng& rng,
                        std::vector<Poly>& out) {
  int n = poly_deg(f);
  if (n == d) {
    out.push_back(poly_monic(F, f));
    return;
  }
  std::uint64_t q = static_cast<std::uint64_t>(F.order());
  Poly factor;
  for (int attempt = 0; attempt < 4096 && factor.empty(); ++attempt) {
    Poly a(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      a[static_cast<size_t>(i)] = static_cast<FElem>(rng.below(q));
    a = poly_trim(std::move(a));
    if (poly_deg(a) < 1) continue;
    Poly g = poly_gcd(F, f, a);
    if (poly_deg(g) > 0 && poly_deg(g) < n) { factor = g; break; }
    Poly b;
    if (F.characteristic() == 2) {
      // trace map over F_{2^(k d)}
      int kd = F.degree() * d;
      Poly t = a, cur = a;
      for (int i = 1; i < kd; ++i) {
        cur = poly_mod(F, poly_mul(F, cur, cur), f);
        t = poly_add(F, t, cur);
      }
      b = t;
    } else {
      std::uint64_t e = 1;
      for (int i = 0; i < d; ++i) e *= q;
      e = (e - 1) / 2;
      Poly t = poly_powmod(F, a, e, f);
      b = poly_sub(F, t, {1});
    }
    Poly g2 = poly_gcd(F, f, b);
    if (poly_deg(g2) > 0 && poly_deg(g2) < n) { factor = g2; break; }
  }
  if (factor.empty()) {
    // deterministic fallback: exhaustive root search splits degree-1 products
    if (d == 1) {
      for (std::int64_t x = 0; x < F.order(); ++x) {
        if (poly_eval(F, f, static_cast<FElem>(x)) == 0) {
          factor = Poly{F.neg(static_cast<FElem>(x)), 1};
          break;
        }
      }
    }
    if (factor.empty()) throw FieldError("equal-degree splitting failed");
  }
  equal_degree_split(F, factor, d, rng, out);
  equal_degree_split(F, poly_divmod(F, f, factor).first, d, rng, out);
}

}  // namespace

std::vector<std::pair<Poly, int>> poly_factor(const Field& F, const Poly& f,
                                              Rng& rng) {
  if (poly_trim(f).empty()) throw FieldError("ZeroPolynomial");
  std::vector<std::pair<Poly, int>> sqf;
  squarefree_decompose(F, f, 1, sqf);
  std::vector<std::pair<Poly, int>> out;
  std::uint64_t q = static_cast<std::uint64_t>(F.order());
  for (auto& [g, mult] : sqf) {
    // distinct-degree factorization of squarefree monic g
    Poly rem = g;
    Poly x = {0, 1};
    Poly xq = x;
    int d = 0;
    while (poly_deg(rem) > 0) {
      ++d;
      if (2 * d > poly_deg(rem)) {
        out.emplace_back(rem, mult);  // remaining part is irreducible
        break;
      }
      xq = poly_powmod(F, xq, q, rem);
      Poly gd = poly_gcd(F, rem, poly_sub(F, xq, x));
      if (poly_deg(gd) > 0) {
        std::vector<Poly> pieces;
        equal_degree_split(F, gd, d, rng, pieces);
        std::sort(pieces.begin(), pieces.end());
        for (auto& piece : pieces) out.emplace_back(piece, mult);
        rem = poly_divmod(F, rem, gd).first;
        xq = poly_mod(F, xq, rem.empty() ? gd : rem);
        if (poly_deg(rem) == 0) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Matrices

static void check_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix shapes differ");
}

Matrix mat_add(const Field& F, const Matrix& a, const Matrix& b) {
  check_same_shape(a, b);
  Matrix out(a.rows(), a.cols());
  for (size_t i = 0; i < a.data().size(); ++i)
    out.data()[i] = F.add(a.data()[i], b.data()[i]);
  return out;
}

Matrix mat_sub(const Field& F, const Matrix& a, const Matrix& b) {
  check_same_shape(a, b);
  Matrix out(a.rows(), a.cols());
  for (size_t i = 0; i < a.data().size(); ++i)
    out.data()[i] = F.sub(a.data()[i], b.data()[i]);
  return out;
}

Matrix mat_mul(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shapes");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      FElem v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) == 0) continue;
        out.at(i, j) = F.add(out.at(i, j), F.mul(v, b.at(k, j)));
      }
    }
  }
  return out;
}

Matrix mat_scale(const Field& F, const Matrix& a, FElem c) {
  Matrix out(a.rows(), a.cols());
  for (size_t i = 0; i < a.data().size(); ++i) out.data()[i] = F.mul(a.data()[i], c);
  return out;
}

Matrix mat_transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  return out;
}

std::vector<FElem> mat_apply(const Field& F, const Matrix& a,
                             const std::vector<FElem>& v) {
  if (a.cols() != static_cast<int>(v.size()))
    throw DimensionMismatch("matrix-vector shapes");
  std::vector<FElem> out(static_cast<size_t>(a.rows()), 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0 && v[static_cast<size_t>(j)] != 0)
        out[static_cast<size_t>(i)] =
            F.add(out[static_cast<size_t>(i)], F.mul(a.at(i, j), v[static_cast<size_t>(j)]));
  return out;
}

std::vector<int> mat_rref(const Field& F, Matrix& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    FElem inv = F.inv(a.at(r, c));
    for (int j = 0; j < a.cols(); ++j) a.at(r, j) = F.mul(a.at(r, j), inv);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      FElem factor = a.at(i, c);
      for (int j = 0; j < a.cols(); ++j)
        a.at(i, j) = F.sub(a.at(i, j), F.mul(factor, a.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int mat_rank(const Field& F, Matrix a) {
  return static_cast<int>(mat_rref(F, a).size());
}

bool mat_solve(const Field& F, const Matrix& a, const std::vector<FElem>& b,
               std::vector<FElem>& solution) {
  if (a.rows() != static_cast<int>(b.size()))
    throw DimensionMismatch("solve shapes");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[static_cast<size_t>(i)];
  }
  auto pivots = mat_rref(F, aug);
  for (size_t t = 0; t < pivots.size(); ++t)
    if (pivots[t] == a.cols()) return false;  // inconsistent
  solution.assign(static_cast<size_t>(a.cols()), 0);
  for (size_t t = 0; t < pivots.size(); ++t)
    solution[static_cast<size_t>(pivots[t])] = aug.at(static_cast<int>(t), a.cols());
  return true;
}

std::vector<std::vector<FElem>> mat_nullspace(const Field& F, Matrix a) {
  int n = a.cols();
  auto pivots = mat_rref(F, a);
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<FElem>> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    std::vector<FElem> v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(c)] = 1;
    for (size_t t = 0; t < pivots.size(); ++t)
      v[static_cast<size_t>(pivots[t])] = F.neg(a.at(static_cast<int>(t), c));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool mat_invert(const Field& F, const Matrix& a, Matrix& inverse) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square");
  int n = a.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = mat_rref(F, aug);
  if (static_cast<int>(pivots.size()) != n || pivots[static_cast<size_t>(n - 1)] != n - 1)
    return false;
  inverse = Matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inverse.at(i, j) = aug.at(i, n + j);
  return true;
}

FElem mat_det(const Field& F, Matrix a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("det of non-square");
  int n = a.rows();
  FElem det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, a.at(c, c));
    FElem inv = F.inv(a.at(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      FElem factor = F.mul(a.at(i, c), inv);
      for (int j = c; j < n; ++j)
        a.at(i, j) = F.sub(a.at(i, j), F.mul(factor, a.at(c, j)));
    }
  }
  return det;
}

bool mat_is_zero(const Matrix& a) {
  for (FElem v : a.data())
    if (v != 0) return false;
  return true;
}

Poly mat_charpoly(const Field& F, const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("charpoly of non-square");
  int n = a.rows();
  if (n == 0) return {1};
  Matrix h = a;
  // reduce to Hessenberg form by similarity transformations
  for (int m = 1; m < n - 1; ++m) {
    int piv = -1;
    for (int i = m; i < n; ++i)
      if (h.at(i, m - 1) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != m) {
      for (int j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(m, j));
      for (int i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, m));
    }
    FElem inv = F.inv(h.at(m, m - 1));
    for (int i = m + 1; i < n; ++i) {
      if (h.at(i, m - 1) == 0) continue;
      FElem u = F.mul(h.at(i, m - 1), inv);
      for (int j = 0; j < n; ++j) h.at(i, j) = F.sub(h.at(i, j), F.mul(u, h.at(m, j)));
      for (int j = 0; j < n; ++j) h.at(j, m) = F.add(h.at(j, m), F.mul(u, h.at(j, i)));
    }
  }
  // charpoly recurrence over the Hessenberg form
  std::vector<Poly> p(static_cast<size_t>(n + 1));
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    // p_m(x) = (x - h[m-1][m-1]) p_{m-1}(x) - sum_i h[i-1][m-1] * (prod of
    // subdiagonal) p_{i-1}(x)
    Poly t = poly_mul(F, p[static_cast<size_t>(m - 1)], Poly{F.neg(h.at(m - 1, m - 1)), 1});
    FElem prod = 1;
    for (int i = m - 1; i >= 1; --i) {
      prod = F.mul(prod, h.at(i, i - 1));
      if (prod == 0) break;
      FElem c = F.mul(prod, h.at(i - 1, m - 1));
      if (c != 0)
        t = poly_sub(F, t, poly_scale(F, p[static_cast<size_t>(i - 1)], c));
    }
    p[static_cast<size_t>(m)] = std::move(t);
  }
  Poly out = p[static_cast<size_t>(n)];
  out.resize(static_cast<size_t>(n + 1), 0);
  return out;
}

Poly mat_min_poly(const Field& F, const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("min_poly of non-square");
  int n = a.rows();
  Poly m = {1};
  for (int s = 0; s < n; ++s) {
    // minimal polynomial of the Krylov sequence from e_s
    std::vector<FElem> v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(s)] = 1;
    std::vector<std::vector<FElem>> krylov;  // rows: v, Av, A^2 v, ...
    krylov.push_back(v);
    while (true) {
      // check whether last vector depends on previous ones
      int r = static_cast<int>(krylov.size());
      Matrix mm(r, n);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) mm.at(i, j) = krylov[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (mat_rank(F, mm) < r) break;
      krylov.push_back(mat_apply(F, a, krylov.back()));
    }
    int d = static_cast<int>(krylov.size()) - 1;  // last vector is dependent
    // solve sum_{i<d} c_i A^i v = A^d v
    Matrix sys(n, d);
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < n; ++i) sys.at(i, j) = krylov[static_cast<size_t>(j)][static_cast<size_t>(i)];
    std::vector<FElem> sol;
    if (!mat_solve(F, sys, krylov[static_cast<size_t>(d)], sol))
      throw FieldError("min_poly internal inconsistency");
    Poly local(static_cast<size_t>(d + 1), 0);
    local[static_cast<size_t>(d)] = 1;
    for (int i = 0; i < d; ++i) local[static_cast<size_t>(i)] = F.neg(sol[static_cast<size_t>(i)]);
    // m = lcm(m, local)
    Poly g = poly_gcd(F, m, local);
    m = poly_mul(F, poly_divmod(F, m, g).first, local);
    m = poly_monic(F, m);
    if (poly_deg(m) == n) break;
  }
  return m;
}

std::vector<std::vector<FElem>> span_basis(
    const Field& F, const std::vector<std::vector<FElem>>& vecs) {
  if (vecs.empty()) return {};
  int n = static_cast<int>(vecs[0].size());
  Matrix m(static_cast<int>(vecs.size()), n);
  for (size_t i = 0; i < vecs.size(); ++i)
    for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = vecs[i][static_cast<size_t>(j)];
  auto pivots = mat_rref(F, m);
  std::vector<std::vector<FElem>> out;
  for (size_t r = 0; r < pivots.size(); ++r) {
    std::vector<FElem> v(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = m.at(static_cast<int>(r), j);
    out.push_back(std::move(v));
  }
  return out;
}

int span_rank(const Field& F, const std::vector<std::vector<FElem>>& vecs) {
  return static_cast<int>(span_basis(F, vecs).size());
}

bool in_span(const Field& F, const std::vector<std::vector<FElem>>& vecs,
             const std::vector<FElem>& v) {
  auto base = vecs;
  int r0 = span_rank(F, base);
  base.push_back(v);
  return span_rank(F, base) == r0;
}

}  // namespace eirep
