#include "eirep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace eirep {

namespace {

bool solve_coords(const Field& F, const std::vector<std::vector<FElem>>& basis,
                  const std::vector<FElem>& v, std::vector<FElem>& coords) {
  if (basis.empty()) {
    for (FElem x : v)
      if (x != 0) return false;
    coords.clear();
    return true;
  }
  Matrix m(static_cast<int>(v.size()), static_cast<int>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < v.size(); ++i)
      m.at(static_cast<int>(i), static_cast<int>(j)) = basis[j][i];
  return mat_solve(F, m, v, coords);
}

// nullspace of the intertwiner system phi_tgt V(s) = W(s) phi_src, flattened
// blockwise; v and w must share a dimension vector for square blocks, but the
// system itself is shape-generic
std::vector<std::vector<FElem>> intertwiner_basis(const RepTarget& target, const Field& F,
                                                  const Representation& v,
                                                  const Representation& w,
                                                  std::vector<int>& offset) {
  const int nn = target.node_count();
  offset.assign(static_cast<size_t>(nn) + 1, 0);
  for (int node = 0; node < nn; ++node)
    offset[static_cast<size_t>(node) + 1] =
        offset[static_cast<size_t>(node)] +
        w.dims[static_cast<size_t>(node)] * v.dims[static_cast<size_t>(node)];
  const int nvar = offset[static_cast<size_t>(nn)];
  std::vector<std::vector<FElem>> eqs;
  for (int s = 0; s < target.slot_count(); ++s) {
    int a = target.slot_src(s), b = target.slot_tgt(s);
    const Matrix& mv = v.mats[static_cast<size_t>(s)];
    const Matrix& mw = w.mats[static_cast<size_t>(s)];
    // phi_b: w_b x v_b, phi_a: w_a x v_a; equation is (phi_b mv - mw phi_a) = 0,
    // entries (i, j) with i < w.dims[b], j < v.dims[a]
    for (int i = 0; i < w.dims[static_cast<size_t>(b)]; ++i)
      for (int j = 0; j < v.dims[static_cast<size_t>(a)]; ++j) {
        std::vector<FElem> row(static_cast<size_t>(nvar), 0);
        for (int k = 0; k < v.dims[static_cast<size_t>(b)]; ++k) {
          size_t idx = static_cast<size_t>(offset[static_cast<size_t>(b)] +
                                           i * v.dims[static_cast<size_t>(b)] + k);
          row[idx] = F.add(row[idx], mv.at(k, j));
        }
        for (int k = 0; k < w.dims[static_cast<size_t>(a)]; ++k) {
          size_t idx = static_cast<size_t>(offset[static_cast<size_t>(a)] +
                                           k * v.dims[static_cast<size_t>(a)] + j);
          row[idx] = F.sub(row[idx], mw.at(i, k));
        }
        eqs.push_back(std::move(row));
      }
  }
  if (nvar == 0) return {};
  if (eqs.empty()) {
    std::vector<std::vector<FElem>> full;
    for (int i = 0; i < nvar; ++i) {
      std::vector<FElem> e(static_cast<size_t>(nvar), 0);
      e[static_cast<size_t>(i)] = 1;
      full.push_back(std::move(e));
    }
    return full;
  }
  Matrix sys(static_cast<int>(eqs.size()), nvar);
  for (size_t i = 0; i < eqs.size(); ++i)
    for (int j = 0; j < nvar; ++j)
      sys.at(static_cast<int>(i), j) = eqs[i][static_cast<size_t>(j)];
  return mat_nullspace(F, sys);
}

}  // namespace

// ---------------------------------------------------------------------------
// RepTarget

RepTarget RepTarget::category(const FiniteCategory& c) {
  RepTarget t;
  t.cat_ = c;
  for (int x = 0; x < c.object_count(); ++x) t.node_ids_.push_back(c.object_id(x));
  const int nm = c.morphism_count();
  for (int f = 0; f < nm; ++f) {
    t.slot_src_.push_back(c.dom(f));
    t.slot_tgt_.push_back(c.cod(f));
    t.slot_ids_.push_back(c.morphism_id(f));
  }
  t.identity_slot_.assign(static_cast<size_t>(c.object_count()), -1);
  for (int x = 0; x < c.object_count(); ++x)
    t.identity_slot_[static_cast<size_t>(x)] = c.identity(x);

  // greedy generator choice: close the derivable set under composition, then
  // promote the first canonical non-derivable morphism to a generator
  std::vector<int> level(static_cast<size_t>(nm), -1);
  for (int x = 0; x < c.object_count(); ++x)
    level[static_cast<size_t>(c.identity(x))] = 0;
  auto close = [&](int at_level) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int g = 0; g < nm; ++g) {
        if (level[static_cast<size_t>(g)] < 0) continue;
        for (int f = 0; f < nm; ++f) {
          if (level[static_cast<size_t>(f)] < 0) continue;
          int gf = c.compose(g, f);
          if (gf >= 0 && level[static_cast<size_t>(gf)] < 0) {
            level[static_cast<size_t>(gf)] = at_level;
            t.derivations_.push_back({gf, g, f, at_level});
            changed = true;
          }
        }
      }
    }
  };
  close(0);
  while (true) {
    int next = -1;
    for (int f = 0; f < nm; ++f)
      if (level[static_cast<size_t>(f)] < 0) {
        next = f;
        break;
      }
    if (next < 0) break;
    t.generators_.push_back(next);
    level[static_cast<size_t>(next)] = static_cast<int>(t.generators_.size());
    close(static_cast<int>(t.generators_.size()));
  }
  t.slot_level_ = level;
  return t;
}

RepTarget RepTarget::presentation(const QuiverPresentation& p) {
  p.validate();
  RepTarget t;
  t.pres_ = p;
  t.node_ids_ = p.vertices;
  for (size_t a = 0; a < p.arrows.size(); ++a) {
    t.slot_src_.push_back(p.vertex_index(p.arrows[a].src));
    t.slot_tgt_.push_back(p.vertex_index(p.arrows[a].tgt));
    t.slot_ids_.push_back(p.arrows[a].id);
    t.generators_.push_back(static_cast<int>(a));
    t.slot_level_.push_back(static_cast<int>(a) + 1);
  }
  return t;
}

void RepTarget::derive(const Field& f, const std::vector<int>& dims,
                       std::vector<Matrix>& mats, int k) const {
  for (size_t x = 0; x < identity_slot_.size(); ++x)
    if (identity_slot_[x] >= 0)
      mats[static_cast<size_t>(identity_slot_[x])] =
          Matrix::identity(dims[x]);
  for (auto& d : derivations_) {
    if (d.level > k) continue;
    mats[static_cast<size_t>(d.slot)] =
        mat_mul(f, mats[static_cast<size_t>(d.g)], mats[static_cast<size_t>(d.f)]);
  }
}

bool RepTarget::prefix_valid(const Field& f, const std::vector<int>& dims,
                             std::vector<Matrix>& mats, int k) const {
  (void)dims;
  if (cat_) {
    const FiniteCategory& c = *cat_;
    for (int g = 0; g < c.morphism_count(); ++g) {
      if (slot_level_[static_cast<size_t>(g)] > k) continue;
      for (int h = 0; h < c.morphism_count(); ++h) {
        if (slot_level_[static_cast<size_t>(h)] > k) continue;
        int gh = c.compose(g, h);
        if (gh < 0) continue;
        if (mat_mul(f, mats[static_cast<size_t>(g)], mats[static_cast<size_t>(h)]) !=
            mats[static_cast<size_t>(gh)])
          return false;
      }
    }
    return true;
  }
  const QuiverPresentation& p = *pres_;
  for (auto& rel : p.relations) {
    bool ready = true;
    for (auto& term : rel)
      for (int a : p.expand_path(term.path))
        if (slot_level_[static_cast<size_t>(a)] > k) ready = false;
    if (!ready) continue;
    Matrix acc;
    bool first = true;
    for (auto& term : rel) {
      auto seq = p.expand_path(term.path);
      Matrix prod = mats[static_cast<size_t>(seq[0])];
      for (size_t i = 1; i < seq.size(); ++i)
        prod = mat_mul(f, prod, mats[static_cast<size_t>(seq[i])]);
      prod = mat_scale(f, prod, f.from_int(term.coeff));
      if (first) {
        acc = std::move(prod);
        first = false;
      } else {
        acc = mat_add(f, acc, prod);
      }
    }
    if (!mat_is_zero(acc)) return false;
  }
  return true;
}

bool RepTarget::is_valid(const Field& f, const std::vector<int>& dims,
                         const std::vector<Matrix>& mats) const {
  for (int s = 0; s < slot_count(); ++s) {
    if (mats[static_cast<size_t>(s)].rows() != dims[static_cast<size_t>(slot_tgt(s))] ||
        mats[static_cast<size_t>(s)].cols() != dims[static_cast<size_t>(slot_src(s))])
      return false;
  }
  for (size_t x = 0; x < identity_slot_.size(); ++x)
    if (identity_slot_[x] >= 0 &&
        mats[static_cast<size_t>(identity_slot_[x])] != Matrix::identity(dims[x]))
      return false;
  std::vector<Matrix> copy = mats;
  return prefix_valid(f, dims, copy, static_cast<int>(generators_.size()) + 1);
}

// ---------------------------------------------------------------------------
// enumeration

Representation RepSet::unpack(size_t index) const {
  Representation r;
  r.dims = dims;
  const std::string& key = keys[index];
  size_t pos = 0;
  for (int s = 0; s < target.slot_count(); ++s) {
    int rows = dims[static_cast<size_t>(target.slot_tgt(s))];
    int cols = dims[static_cast<size_t>(target.slot_src(s))];
    Matrix m(rows, cols);
    for (auto& v : m.data()) v = static_cast<unsigned char>(key[pos++]);
    r.mats.push_back(std::move(m));
  }
  return r;
}

std::string RepSet::pack(const Representation& r) const {
  std::string key;
  for (auto& m : r.mats)
    for (FElem v : m.data())
      key.push_back(static_cast<char>(static_cast<unsigned char>(v)));
  return key;
}

int RepSet::index_of(const std::string& key) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) return -1;
  return static_cast<int>(it - keys.begin());
}

RepSet enumerate_reps(const RepTarget& target, const std::vector<int>& dims,
                      std::shared_ptr<const Field> field, std::uint64_t budget) {
  if (static_cast<int>(dims.size()) != target.node_count())
    throw OracleError("BadDimVector", "dimension vector length mismatch");
  for (int d : dims)
    if (d < 0) throw OracleError("BadDimVector", "negative dimension");
  const Field& F = *field;
  if (F.order() > 250)
    throw OracleError("FieldTooLarge", "oracle packing requires q <= 250");

  RepSet out;
  out.target = target;
  out.field = field;
  out.dims = dims;

  const auto& gens = target.generators();
  long double raw = 1;
  for (int g : gens) {
    int cells = dims[static_cast<size_t>(target.slot_src(g))] *
                dims[static_cast<size_t>(target.slot_tgt(g))];
    raw *= std::pow(static_cast<long double>(F.order()), cells);
  }

  std::vector<Matrix> mats(static_cast<size_t>(target.slot_count()));
  for (int s = 0; s < target.slot_count(); ++s)
    mats[static_cast<size_t>(s)] = Matrix(dims[static_cast<size_t>(target.slot_tgt(s))],
                                          dims[static_cast<size_t>(target.slot_src(s))]);
  target.derive(F, dims, mats, 0);
  std::uint64_t visited = 0;

  std::function<void(size_t)> rec = [&](size_t level) {
    if (level == gens.size()) {
      target.derive(F, dims, mats, static_cast<int>(level));
      Representation r;
      r.dims = dims;
      r.mats = mats;
      out.keys.push_back(out.pack(r));
      return;
    }
    int g = gens[level];
    int rows = dims[static_cast<size_t>(target.slot_tgt(g))];
    int cols = dims[static_cast<size_t>(target.slot_src(g))];
    const int cells = rows * cols;
    Matrix& m = mats[static_cast<size_t>(g)];
    std::vector<FElem> odo(static_cast<size_t>(cells), 0);
    while (true) {
      if (++visited > budget)
        throw OracleError("BudgetExceeded",
                          "raw search space about " +
                              std::to_string(static_cast<double>(raw)) +
                              "; visited-node budget exhausted");
      for (int i = 0; i < cells; ++i)
        m.data()[static_cast<size_t>(i)] = odo[static_cast<size_t>(i)];
      target.derive(F, dims, mats, static_cast<int>(level) + 1);
      if (target.prefix_valid(F, dims, mats, static_cast<int>(level) + 1)) rec(level + 1);
      int i = 0;
      for (; i < cells; ++i) {
        if (++odo[static_cast<size_t>(i)] < static_cast<FElem>(F.order())) break;
        odo[static_cast<size_t>(i)] = 0;
      }
      if (i == cells) break;
    }
  };
  rec(0);
  std::sort(out.keys.begin(), out.keys.end());
  out.keys.erase(std::unique(out.keys.begin(), out.keys.end()), out.keys.end());
  return out;
}

// ---------------------------------------------------------------------------
// isomorphism classes via orbit partition

namespace {

struct UF {
  std::vector<int> parent;
  explicit UF(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// transvections I + zeta^t E_{i,i+1}, I + zeta^t E_{i+1,i} (t < k) and
// diag(zeta, 1, ..., 1) generate GL_d(F_q)
std::vector<Matrix> gl_generators(const Field& F, int d) {
  std::vector<Matrix> out;
  if (d == 0) return out;
  FElem zeta = F.generator();
  if (F.order() > 2) {
    Matrix diag = Matrix::identity(d);
    diag.at(0, 0) = zeta;
    out.push_back(diag);
  }
  for (int i = 0; i + 1 < d; ++i) {
    FElem c = 1;
    for (int t = 0; t < F.degree(); ++t) {
      Matrix up = Matrix::identity(d);
      up.at(i, i + 1) = c;
      out.push_back(up);
      Matrix down = Matrix::identity(d);
      down.at(i + 1, i) = c;
      out.push_back(down);
      c = F.mul(c, zeta);
    }
  }
  return out;
}

}  // namespace

IsoClasses iso_classes(const RepSet& reps) {
  const Field& F = *reps.field;
  const size_t n = reps.keys.size();
  UF uf(n);

  struct NodeGen {
    int node;
    Matrix p, pinv;
  };
  std::vector<NodeGen> gens;
  for (int v = 0; v < reps.target.node_count(); ++v) {
    for (auto& g : gl_generators(F, reps.dims[static_cast<size_t>(v)])) {
      Matrix inv;
      if (!mat_invert(F, g, inv))
        throw OracleError("Internal", "GL generator not invertible");
      gens.push_back({v, g, inv});
    }
  }

  for (size_t r = 0; r < n; ++r) {
    Representation rep = reps.unpack(r);
    for (auto& g : gens) {
      Representation moved = rep;
      for (int s = 0; s < reps.target.slot_count(); ++s) {
        Matrix& m = moved.mats[static_cast<size_t>(s)];
        if (reps.target.slot_tgt(s) == g.node) m = mat_mul(F, g.p, m);
        if (reps.target.slot_src(s) == g.node) m = mat_mul(F, m, g.pinv);
      }
      int idx = reps.index_of(reps.pack(moved));
      if (idx < 0) throw OracleError("Internal", "orbit left the enumeration");
      uf.unite(static_cast<int>(r), idx);
    }
  }

  IsoClasses out;
  out.class_of.assign(n, -1);
  std::vector<int> root_class(n, -1);
  for (size_t r = 0; r < n; ++r) {
    int root = uf.find(static_cast<int>(r));
    if (root_class[static_cast<size_t>(root)] < 0) {
      root_class[static_cast<size_t>(root)] = out.count++;
      out.class_rep.push_back(static_cast<int>(r));
    }
    out.class_of[r] = root_class[static_cast<size_t>(root)];
  }
  return out;
}

// ---------------------------------------------------------------------------
// endomorphism algebras and indecomposability

StructureAlgebra endomorphism_algebra(const RepTarget& target,
                                      std::shared_ptr<const Field> field,
                                      const Representation& rep) {
  const Field& F = *field;
  const int nn = target.node_count();
  std::vector<int> offset;
  auto basis = intertwiner_basis(target, F, rep, rep, offset);
  const int nvar = offset[static_cast<size_t>(nn)];
  const int d = static_cast<int>(basis.size());

  auto block_mul = [&](const std::vector<FElem>& u, const std::vector<FElem>& v) {
    std::vector<FElem> out(static_cast<size_t>(nvar), 0);
    for (int node = 0; node < nn; ++node) {
      int dn = rep.dims[static_cast<size_t>(node)];
      int off = offset[static_cast<size_t>(node)];
      for (int i = 0; i < dn; ++i)
        for (int j = 0; j < dn; ++j) {
          FElem acc = 0;
          for (int k = 0; k < dn; ++k)
            acc = F.add(acc, F.mul(u[static_cast<size_t>(off + i * dn + k)],
                                   v[static_cast<size_t>(off + k * dn + j)]));
          out[static_cast<size_t>(off + i * dn + j)] = acc;
        }
    }
    return out;
  };

  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) labels.push_back("phi" + std::to_string(i));
  std::vector<std::vector<std::pair<int, FElem>>> table(static_cast<size_t>(d) *
                                                        static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto prod = block_mul(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
      std::vector<FElem> coords;
      if (!solve_coords(F, basis, prod, coords))
        throw OracleError("Internal", "endomorphism space not closed");
      for (int k = 0; k < d; ++k)
        if (coords[static_cast<size_t>(k)] != 0)
          table[static_cast<size_t>(i) * static_cast<size_t>(d) + static_cast<size_t>(j)]
              .emplace_back(k, coords[static_cast<size_t>(k)]);
    }
  std::vector<FElem> identity(static_cast<size_t>(nvar), 0);
  for (int node = 0; node < nn; ++node) {
    int dn = rep.dims[static_cast<size_t>(node)];
    for (int i = 0; i < dn; ++i)
      identity[static_cast<size_t>(offset[static_cast<size_t>(node)] + i * dn + i)] = 1;
  }
  std::vector<FElem> unit;
  if (!solve_coords(F, basis, identity, unit))
    throw OracleError("Internal", "identity endomorphism outside the solved space");
  return StructureAlgebra::make(field, std::move(labels), std::move(table),
                                std::move(unit));
}

bool is_indecomposable(const RepTarget& target, std::shared_ptr<const Field> field,
                       const Representation& rep, std::uint64_t seed) {
  int total = 0;
  for (int dv : rep.dims) total += dv;
  if (total == 0) return false;
  return is_local_algebra(endomorphism_algebra(target, field, rep), seed);
}

std::optional<Splitting> split_representation(const RepTarget& target,
                                              std::shared_ptr<const Field> field,
                                              const Representation& rep,
                                              std::uint64_t seed) {
  const Field& F = *field;
  int total = 0;
  for (int dv : rep.dims) total += dv;
  if (total == 0) return std::nullopt;
  auto endo = endomorphism_algebra(target, field, rep);
  auto idems = primitive_idempotents_nosplit(endo, seed);
  if (idems.size() <= 1) return std::nullopt;

  const int nn = target.node_count();
  std::vector<int> offset;
  auto basis = intertwiner_basis(target, F, rep, rep, offset);
  const AlgElem& e = idems[0];
  std::vector<FElem> flat(static_cast<size_t>(offset[static_cast<size_t>(nn)]), 0);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < flat.size(); ++j)
      flat[j] = F.add(flat[j], F.mul(e[i], basis[i][j]));

  auto block_of = [&](const std::vector<FElem>& v, int node) {
    int dn = rep.dims[static_cast<size_t>(node)];
    Matrix m(dn, dn);
    for (int i = 0; i < dn; ++i)
      for (int j = 0; j < dn; ++j)
        m.at(i, j) =
            v[static_cast<size_t>(offset[static_cast<size_t>(node)] + i * dn + j)];
    return m;
  };

  std::vector<std::vector<std::vector<FElem>>> im_a(static_cast<size_t>(nn)),
      im_b(static_cast<size_t>(nn));
  for (int v = 0; v < nn; ++v) {
    int dn = rep.dims[static_cast<size_t>(v)];
    Matrix ev = block_of(flat, v);
    Matrix cv = mat_sub(F, Matrix::identity(dn), ev);
    std::vector<std::vector<FElem>> cols_a, cols_b;
    for (int j = 0; j < dn; ++j) {
      std::vector<FElem> ca(static_cast<size_t>(dn)), cb(static_cast<size_t>(dn));
      for (int i = 0; i < dn; ++i) {
        ca[static_cast<size_t>(i)] = ev.at(i, j);
        cb[static_cast<size_t>(i)] = cv.at(i, j);
      }
      cols_a.push_back(std::move(ca));
      cols_b.push_back(std::move(cb));
    }
    im_a[static_cast<size_t>(v)] = span_basis(F, cols_a);
    im_b[static_cast<size_t>(v)] = span_basis(F, cols_b);
  }

  auto restrict_to = [&](const std::vector<std::vector<std::vector<FElem>>>& im) {
    Representation out;
    for (int v = 0; v < nn; ++v)
      out.dims.push_back(static_cast<int>(im[static_cast<size_t>(v)].size()));
    for (int s = 0; s < target.slot_count(); ++s) {
      int a = target.slot_src(s), b = target.slot_tgt(s);
      const auto& ba = im[static_cast<size_t>(a)];
      const auto& bb = im[static_cast<size_t>(b)];
      Matrix m(static_cast<int>(bb.size()), static_cast<int>(ba.size()));
      for (size_t j = 0; j < ba.size(); ++j) {
        auto img = mat_apply(F, rep.mats[static_cast<size_t>(s)], ba[j]);
        std::vector<FElem> coords;
        if (!solve_coords(F, bb, img, coords))
          throw OracleError("Internal", "summand not invariant");
        for (size_t i = 0; i < bb.size(); ++i)
          m.at(static_cast<int>(i), static_cast<int>(j)) = coords[i];
      }
      out.mats.push_back(std::move(m));
    }
    return out;
  };

  Splitting s;
  s.summand_a = restrict_to(im_a);
  s.summand_b = restrict_to(im_b);
  return s;
}

bool are_isomorphic(const RepTarget& target, std::shared_ptr<const Field> field,
                    const Representation& v, const Representation& w,
                    std::uint64_t budget, std::uint64_t seed) {
  const Field& F = *field;
  if (v.dims != w.dims) return false;
  const int nn = target.node_count();
  std::vector<int> offset;
  auto basis = intertwiner_basis(target, F, v, w, offset);
  const int nvar = offset[static_cast<size_t>(nn)];
  if (nvar == 0) return true;  // both zero representations
  if (basis.empty()) return false;

  auto invertible = [&](const std::vector<FElem>& flat) {
    for (int node = 0; node < nn; ++node) {
      int dn = v.dims[static_cast<size_t>(node)];
      if (dn == 0) continue;
      Matrix m(dn, dn);
      for (int i = 0; i < dn; ++i)
        for (int j = 0; j < dn; ++j)
          m.at(i, j) =
              flat[static_cast<size_t>(offset[static_cast<size_t>(node)] + i * dn + j)];
      if (mat_det(F, m) == 0) return false;
    }
    return true;
  };

  const std::uint64_t qsize = static_cast<std::uint64_t>(F.order());
  long double space =
      std::pow(static_cast<long double>(qsize), static_cast<long double>(basis.size()));
  std::vector<FElem> flat(static_cast<size_t>(nvar));
  if (space <= static_cast<long double>(budget)) {
    std::uint64_t total = 1;
    for (size_t i = 0; i < basis.size(); ++i) total *= qsize;
    for (std::uint64_t code = 1; code < total; ++code) {
      std::fill(flat.begin(), flat.end(), 0);
      std::uint64_t t = code;
      for (size_t i = 0; i < basis.size(); ++i) {
        auto c = static_cast<FElem>(t % qsize);
        t /= qsize;
        if (c != 0)
          for (int j = 0; j < nvar; ++j)
            flat[static_cast<size_t>(j)] = F.add(
                flat[static_cast<size_t>(j)], F.mul(c, basis[i][static_cast<size_t>(j)]));
      }
      if (invertible(flat)) return true;
    }
    return false;
  }
  Rng rng(seed);
  for (int trial = 0; trial < 100000; ++trial) {
    std::fill(flat.begin(), flat.end(), 0);
    for (size_t i = 0; i < basis.size(); ++i) {
      auto c = static_cast<FElem>(rng.below(qsize));
      if (c != 0)
        for (int j = 0; j < nvar; ++j)
          flat[static_cast<size_t>(j)] = F.add(flat[static_cast<size_t>(j)],
                                               F.mul(c, basis[i][static_cast<size_t>(j)]));
    }
    if (invertible(flat)) return true;
  }
  throw OracleError("BudgetExceeded",
                    "intertwiner space too large for exhaustive search and no randomized "
                    "witness found");
}

OracleCount count_indecomposables(const RepTarget& target, const std::vector<int>& dims,
                                  std::shared_ptr<const Field> field,
                                  std::uint64_t budget, std::uint64_t seed) {
  auto reps = enumerate_reps(target, dims, field, budget);
  auto classes = iso_classes(reps);
  OracleCount out;
  out.dims = dims;
  out.total_reps = reps.count();
  for (int c = 0; c < classes.count; ++c) {
    auto rep = reps.unpack(static_cast<size_t>(classes.class_rep[static_cast<size_t>(c)]));
    if (is_indecomposable(target, field, rep, seed)) ++out.indecomposable_classes;
  }
  return out;
}

// ---------------------------------------------------------------------------
// explicit families

namespace {

struct GroupSide {
  int object;
  std::vector<int> elements;  // morphism indices of End(object)
  CayleyTable table;
  std::vector<std::string> ids;
};

GroupSide side_of(const FiniteCategory& c, int object) {
  GroupSide s;
  s.object = object;
  s.elements = c.endomorphisms(object);
  const int n = static_cast<int>(s.elements.size());
  for (int e : s.elements) {
    s.table.elements.push_back(c.morphism_id(e));
    s.ids.push_back(c.morphism_id(e));
  }
  s.table.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  auto pos = [&](int m) {
    for (int i = 0; i < n; ++i)
      if (s.elements[static_cast<size_t>(i)] == m) return i;
    return -1;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s.table.table[static_cast<size_t>(i)][static_cast<size_t>(j)] = pos(
          c.compose(s.elements[static_cast<size_t>(i)], s.elements[static_cast<size_t>(j)]));
  return s;
}

struct GroupModule {
  int dim = 0;
  std::vector<Matrix> action;  // by element position in the GroupSide
};

GroupModule semisimple_module(const GroupSide& side, std::shared_ptr<const Field> field,
                              std::uint64_t seed) {
  const Field& F = *field;
  auto alg = group_algebra(side.table, field);
  if (!radical(alg).empty())
    throw OracleError("RegimeMismatch",
                      "group algebra is not semisimple in this characteristic");
  auto dec = primitive_idempotents(alg, seed);
  if (dec.extension_degree != 1)
    throw OracleError("RegimeMismatch",
                      "field does not split the group algebra (needs extension degree " +
                          std::to_string(dec.extension_degree) + ")");
  std::vector<int> class_size(static_cast<size_t>(dec.class_count), 0);
  for (int cl : dec.simple_class) ++class_size[static_cast<size_t>(cl)];

  std::vector<AlgElem> module_basis;
  int big_class = -1;
  for (int cl = 0; cl < dec.class_count; ++cl)
    if (class_size[static_cast<size_t>(cl)] >= 2) big_class = cl;
  if (big_class >= 0) {
    int pick = -1;
    for (size_t i = 0; i < dec.idempotents.size(); ++i)
      if (dec.simple_class[i] == big_class) pick = static_cast<int>(i);
    const AlgElem& e = dec.idempotents[static_cast<size_t>(pick)];
    std::vector<AlgElem> cols;
    for (int i = 0; i < alg.dim(); ++i) cols.push_back(alg.mul(alg.basis_elem(i), e));
    module_basis = span_basis(F, cols);  // the simple left module A e
  } else {
    if (dec.class_count < 2)
      throw OracleError("RegimeMismatch",
                        "need two distinct simple modules on an abelian side");
    module_basis.push_back(dec.idempotents[0]);
    module_basis.push_back(dec.idempotents[1]);
  }
  GroupModule out;
  out.dim = static_cast<int>(module_basis.size());
  for (size_t g = 0; g < side.ids.size(); ++g) {
    int bidx = -1;
    for (int i = 0; i < alg.dim(); ++i)
      if (alg.basis()[static_cast<size_t>(i)] == side.ids[g]) bidx = i;
    Matrix m(out.dim, out.dim);
    for (int j = 0; j < out.dim; ++j) {
      AlgElem img = alg.mul(alg.basis_elem(bidx), module_basis[static_cast<size_t>(j)]);
      std::vector<FElem> coords;
      if (!solve_coords(F, module_basis, img, coords))
        throw OracleError("Internal", "module basis not invariant");
      for (int i = 0; i < out.dim; ++i) m.at(i, j) = coords[static_cast<size_t>(i)];
    }
    out.action.push_back(std::move(m));
  }
  return out;
}

// indecomposable module whose restriction to the cyclic Sylow p-subgroup has
// a direct summand of dimension exactly p (the full unipotent Jordan block);
// found by a bounded oracle search with the basis adapted so the block leads
GroupModule modular_module(const GroupSide& side, std::shared_ptr<const Field> field,
                           std::uint64_t seed) {
  const Field& F = *field;
  std::int64_t p = F.characteristic();
  if (!sylow_p_cyclic(side.table, p))
    throw OracleError("RegimeMismatch", "Sylow p-subgroup is not cyclic");
  int order = side.table.order();
  int ppart = 1;
  while (order % p == 0) {
    order /= static_cast<int>(p);
    ppart *= static_cast<int>(p);
  }
  if (ppart == 1) throw OracleError("RegimeMismatch", "group order prime to p");
  int sylow_gen = -1;
  for (int i = 0; i < side.table.order(); ++i)
    if (side.table.element_order(i) == ppart) sylow_gen = i;

  auto cat = group_category(side.table, "gobj");
  auto target = RepTarget::category(cat);
  const int pint = static_cast<int>(p);
  for (int dim = pint; dim <= pint + 2; ++dim) {
    RepSet reps;
    try {
      reps = enumerate_reps(target, {dim}, field, (1ULL << 26));
    } catch (const OracleError&) {
      break;
    }
    auto classes = iso_classes(reps);
    for (int cl = 0; cl < classes.count; ++cl) {
      auto rep =
          reps.unpack(static_cast<size_t>(classes.class_rep[static_cast<size_t>(cl)]));
      if (!is_indecomposable(target, field, rep, seed)) continue;
      int slot = cat.morphism_index(side.ids[static_cast<size_t>(sylow_gen)]);
      Matrix u = rep.mats[static_cast<size_t>(slot)];
      Matrix nmat = mat_sub(F, u, Matrix::identity(dim));
      auto npow = [&](int e) {
        Matrix acc = Matrix::identity(dim);
        for (int i = 0; i < e; ++i) acc = mat_mul(F, acc, nmat);
        return acc;
      };
      auto rank_pow = [&](int e) { return mat_rank(F, npow(e)); };
      int blocks_p = (rank_pow(pint - 1) - rank_pow(pint)) -
                     (rank_pow(pint) - rank_pow(pint + 1));
      if (blocks_p <= 0) continue;

      // Jordan chain basis with one chain of length exactly p first
      int m = 0;
      while (rank_pow(m) > 0) ++m;
      std::vector<std::vector<FElem>> carried;
      std::vector<std::vector<std::vector<FElem>>> chains;
      for (int j = m; j >= 1; --j) {
        auto kj1 = mat_nullspace(F, npow(j - 1));
        auto kj = mat_nullspace(F, npow(j));
        std::vector<std::vector<FElem>> span = kj1;
        for (auto& cvec : carried) span.push_back(cvec);
        std::vector<std::vector<FElem>> new_tops;
        for (auto& cand : kj)
          if (!in_span(F, span, cand)) {
            span.push_back(cand);
            new_tops.push_back(cand);
          }
        std::vector<std::vector<FElem>> next_carried;
        for (auto& cvec : carried) next_carried.push_back(mat_apply(F, nmat, cvec));
        for (auto& top : new_tops) {
          std::vector<std::vector<FElem>> chain;
          std::vector<FElem> cur = top;
          for (int s = 0; s < j; ++s) {
            chain.push_back(cur);
            cur = mat_apply(F, nmat, cur);
          }
          chains.push_back(chain);
          next_carried.push_back(mat_apply(F, nmat, top));
        }
        carried = std::move(next_carried);
      }
      std::stable_sort(chains.begin(), chains.end(), [&](const auto& a, const auto& b) {
        bool ap = static_cast<int>(a.size()) == pint;
        bool bp = static_cast<int>(b.size()) == pint;
        if (ap != bp) return ap;
        return a.size() > b.size();
      });
      std::vector<std::vector<FElem>> chain_basis;
      for (auto& chain : chains)
        for (size_t s = chain.size(); s-- > 0;) chain_basis.push_back(chain[s]);
      if (static_cast<int>(chain_basis.size()) != dim) continue;
      Matrix t(dim, dim);
      for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i)
          t.at(i, j) = chain_basis[static_cast<size_t>(j)][static_cast<size_t>(i)];
      Matrix tinv;
      if (!mat_invert(F, t, tinv)) continue;

      GroupModule out;
      out.dim = dim;
      for (size_t g = 0; g < side.ids.size(); ++g) {
        int gslot = cat.morphism_index(side.ids[g]);
        out.action.push_back(
            mat_mul(F, tinv, mat_mul(F, rep.mats[static_cast<size_t>(gslot)], t)));
      }
      return out;
    }
  }
  throw OracleError("RegimeMismatch",
                    "no indecomposable module with a p-dimensional Jordan summand found "
                    "within the search bound");
}

}  // namespace

bool representation_valid(const FiniteCategory& c, const Field& f,
                          const Representation& rep) {
  for (int m = 0; m < c.morphism_count(); ++m) {
    const Matrix& mat = rep.mats[static_cast<size_t>(m)];
    if (mat.rows() != rep.dims[static_cast<size_t>(c.cod(m))] ||
        mat.cols() != rep.dims[static_cast<size_t>(c.dom(m))])
      return false;
  }
  for (int x = 0; x < c.object_count(); ++x)
    if (rep.mats[static_cast<size_t>(c.identity(x))] !=
        Matrix::identity(rep.dims[static_cast<size_t>(x)]))
      return false;
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int h = 0; h < c.morphism_count(); ++h) {
      int gh = c.compose(g, h);
      if (gh < 0) continue;
      if (mat_mul(f, rep.mats[static_cast<size_t>(g)], rep.mats[static_cast<size_t>(h)]) !=
          rep.mats[static_cast<size_t>(gh)])
        return false;
    }
  return true;
}

FamilyWitness build_family(const FiniteCategory& c, std::shared_ptr<const Field> field,
                           FElem lambda, std::uint64_t seed) {
  const Field& F = *field;
  if (c.object_count() != 2)
    throw OracleError("RegimeMismatch", "family construction expects two objects");
  int x = 0, y = 1;
  if (c.hom(0, 1).empty()) std::swap(x, y);
  if (c.hom(x, y).empty())
    throw OracleError("RegimeMismatch", "no morphisms between the two objects");
  auto action = hom_action(c, x, y);
  auto props = action_properties(c, action);
  if (!props.is_free)
    throw OracleError("RegimeMismatch", "the product action is not free");

  GroupSide gx = side_of(c, x), gy = side_of(c, y);
  std::int64_t p = F.characteristic();
  bool mod_x = gx.table.order() % p == 0;
  bool mod_y = gy.table.order() % p == 0;

  FamilyWitness out;
  out.lambda = lambda;
  GroupModule mx, my;
  if (!mod_x && !mod_y) {
    out.regime = "both-semisimple";
    mx = semisimple_module(gx, field, seed);
    my = semisimple_module(gy, field, seed);
  } else if (mod_x && !mod_y) {
    out.regime = "left-modular";
    mx = modular_module(gx, field, seed);
    my = semisimple_module(gy, field, seed);
  } else if (!mod_x && mod_y) {
    out.regime = "right-modular";
    mx = semisimple_module(gx, field, seed);
    my = modular_module(gy, field, seed);
  } else {
    throw OracleError("RegimeMismatch", "both sides modular: use induce_from_product");
  }
  if (mx.dim < 2 || my.dim < 2)
    throw OracleError("RegimeMismatch", "modules of dimension >= 2 required");

  Matrix a_lambda(my.dim, mx.dim);
  a_lambda.at(0, 0) = 1;
  a_lambda.at(1, 0) = lambda;
  a_lambda.at(1, 1) = 1;
  out.a_lambda = a_lambda;

  Representation rep;
  rep.dims.assign(2, 0);
  rep.dims[static_cast<size_t>(x)] = mx.dim;
  rep.dims[static_cast<size_t>(y)] = my.dim;
  rep.mats.assign(static_cast<size_t>(c.morphism_count()), Matrix());
  for (size_t i = 0; i < gx.elements.size(); ++i)
    rep.mats[static_cast<size_t>(gx.elements[i])] = mx.action[i];
  for (size_t i = 0; i < gy.elements.size(); ++i)
    rep.mats[static_cast<size_t>(gy.elements[i])] = my.action[i];

  auto gx_pos = [&](int m) {
    for (size_t i = 0; i < gx.elements.size(); ++i)
      if (gx.elements[i] == m) return static_cast<int>(i);
    return -1;
  };
  auto gy_pos = [&](int m) {
    for (size_t i = 0; i < gy.elements.size(); ++i)
      if (gy.elements[i] == m) return static_cast<int>(i);
    return -1;
  };

  std::vector<int> base(static_cast<size_t>(props.orbit_count), -1);
  for (size_t i = 0; i < action.hom.size(); ++i) {
    int orb = props.orbit_of[i];
    if (base[static_cast<size_t>(orb)] < 0) base[static_cast<size_t>(orb)] = action.hom[i];
  }
  for (size_t i = 0; i < action.hom.size(); ++i) {
    int f = action.hom[i];
    int orb = props.orbit_of[i];
    Matrix block(my.dim, mx.dim);
    if (orb == 0) {
      bool located = false;
      for (int g : gx.elements) {
        for (int h : gy.elements) {
          if (c.compose(h, c.compose(base[0], g)) == f) {
            block =
                mat_mul(F, my.action[static_cast<size_t>(gy_pos(h))],
                        mat_mul(F, a_lambda, mx.action[static_cast<size_t>(gx_pos(g))]));
            located = true;
            break;
          }
        }
        if (located) break;
      }
      if (!located) throw OracleError("Internal", "orbit label not found");
    }
    rep.mats[static_cast<size_t>(f)] = block;
  }
  if (!representation_valid(c, F, rep))
    throw OracleError("RegimeMismatch", "constructed family is not functorial");
  out.rep = rep;
  return out;
}

Representation induce_from_product(const FiniteCategory& c,
                                   std::shared_ptr<const Field> field,
                                   const std::map<std::string, Matrix>& g_action,
                                   const std::map<std::string, Matrix>& h_action) {
  const Field& F = *field;
  if (c.object_count() != 2) throw OracleError("RegimeMismatch", "two objects required");
  int x = 0, y = 1;
  if (c.hom(0, 1).empty()) std::swap(x, y);
  auto action = hom_action(c, x, y);
  auto props = action_properties(c, action);
  if (!props.is_free) throw OracleError("ActionNotFree", "product action is not free");

  int dim = -1;
  for (auto& [id, m] : g_action) {
    (void)id;
    if (dim < 0) dim = m.rows();
    if (m.rows() != dim || m.cols() != dim)
      throw OracleError("RegimeMismatch", "module matrices must share one dimension");
  }
  for (auto& [id, m] : h_action) {
    (void)id;
    if (m.rows() != dim || m.cols() != dim)
      throw OracleError("RegimeMismatch", "module matrices must share one dimension");
  }
  for (auto& [gi, gm] : g_action)
    for (auto& [hi, hm] : h_action) {
      (void)gi;
      (void)hi;
      if (mat_mul(F, gm, hm) != mat_mul(F, hm, gm))
        throw OracleError("RegimeMismatch", "G and H actions do not commute");
    }

  Representation rep;
  rep.dims.assign(2, dim);
  rep.mats.assign(static_cast<size_t>(c.morphism_count()), Matrix());
  for (int m : c.endomorphisms(x))
    rep.mats[static_cast<size_t>(m)] = g_action.at(c.morphism_id(m));
  for (int m : c.endomorphisms(y))
    rep.mats[static_cast<size_t>(m)] = h_action.at(c.morphism_id(m));

  std::vector<int> base(static_cast<size_t>(props.orbit_count), -1);
  for (size_t i = 0; i < action.hom.size(); ++i) {
    int orb = props.orbit_of[i];
    if (base[static_cast<size_t>(orb)] < 0) base[static_cast<size_t>(orb)] = action.hom[i];
  }
  for (size_t i = 0; i < action.hom.size(); ++i) {
    int f = action.hom[i];
    int orb = props.orbit_of[i];
    bool located = false;
    for (int g : c.endomorphisms(x)) {
      for (int h : c.endomorphisms(y)) {
        if (c.compose(h, c.compose(base[static_cast<size_t>(orb)], g)) == f) {
          rep.mats[static_cast<size_t>(f)] =
              mat_mul(F, h_action.at(c.morphism_id(h)), g_action.at(c.morphism_id(g)));
          located = true;
          break;
        }
      }
      if (located) break;
    }
    if (!located) throw OracleError("Internal", "free orbit label not found");
  }
  if (!representation_valid(c, F, rep))
    throw OracleError("RegimeMismatch", "induced module is not functorial");
  return rep;
}

}  // namespace eirep
