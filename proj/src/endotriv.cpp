#include "eirep/endotriv.hpp"

#include <algorithm>
#include <numeric>

namespace eirep {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

bool is_endotrivial(const FiniteCategory& c) { return c.is_endotrivial(); }

Endotrivialization endotrivialize(const FiniteCategory& c) {
  const int nm = c.morphism_count();
  UnionFind uf(nm);

  // generating relation: for all f': a -> w, endomorphism h of w, f'': w -> b,
  // identify f''∘h∘f' with f''∘f'; the transitive hull is the union-find.
  for (int w = 0; w < c.object_count(); ++w) {
    auto endos = c.endomorphisms(w);
    for (int fp = 0; fp < nm; ++fp) {
      if (c.cod(fp) != w) continue;
      for (int fpp = 0; fpp < nm; ++fpp) {
        if (c.dom(fpp) != w) continue;
        int base = c.compose(fpp, fp);
        for (int h : endos) {
          int twisted = c.compose(fpp, c.compose(h, fp));
          if (twisted != base) uf.unite(twisted, base);
        }
      }
    }
  }

  // canonical class representative: least morphism index (hence least id)
  std::vector<int> rep(static_cast<size_t>(nm), -1);
  for (int f = 0; f < nm; ++f) {
    int r = uf.find(f);
    if (rep[static_cast<size_t>(r)] < 0) rep[static_cast<size_t>(r)] = f;
  }
  std::vector<int> class_of(static_cast<size_t>(nm));
  for (int f = 0; f < nm; ++f) class_of[static_cast<size_t>(f)] = rep[static_cast<size_t>(uf.find(f))];

  // classes only relate parallel morphisms; verify
  for (int f = 0; f < nm; ++f) {
    int r = class_of[static_cast<size_t>(f)];
    if (c.dom(f) != c.dom(r) || c.cod(f) != c.cod(r))
      throw CategoryError("IncompatibleQuotient", {c.morphism_id(f), c.morphism_id(r)},
                          "equivalence class mixes non-parallel morphisms");
  }

  // induced composition must be class-independent
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (c.cod(f) != c.dom(g)) continue;
      int base = class_of[static_cast<size_t>(c.compose(g, f))];
      for (int g2 = 0; g2 < nm; ++g2) {
        if (class_of[static_cast<size_t>(g2)] != class_of[static_cast<size_t>(g)]) continue;
        for (int f2 = 0; f2 < nm; ++f2) {
          if (class_of[static_cast<size_t>(f2)] != class_of[static_cast<size_t>(f)]) continue;
          if (class_of[static_cast<size_t>(c.compose(g2, f2))] != base)
            throw CategoryError("IncompatibleQuotient",
                                {c.morphism_id(g), c.morphism_id(f), c.morphism_id(g2),
                                 c.morphism_id(f2)},
                                "induced composition not well defined");
        }
      }
    }

  // assemble the quotient category on representative morphisms
  RawCategory raw;
  for (int x = 0; x < c.object_count(); ++x) raw.objects.push_back(c.object_id(x));
  std::vector<int> reps;
  for (int f = 0; f < nm; ++f)
    if (class_of[static_cast<size_t>(f)] == f) reps.push_back(f);
  for (int f : reps)
    raw.morphisms.push_back({c.morphism_id(f), c.object_id(c.dom(f)), c.object_id(c.cod(f))});
  for (int x = 0; x < c.object_count(); ++x)
    raw.identities[c.object_id(x)] =
        c.morphism_id(class_of[static_cast<size_t>(c.identity(x))]);
  for (int g : reps)
    for (int f : reps) {
      int gf = c.compose(g, f);
      if (gf >= 0)
        raw.compose.push_back({c.morphism_id(g), c.morphism_id(f),
                               c.morphism_id(class_of[static_cast<size_t>(gf)])});
    }

  Endotrivialization out;
  out.source = c;
  out.quotient = FiniteCategory::validate(raw);
  out.morphism_map.assign(static_cast<size_t>(nm), -1);
  for (int f = 0; f < nm; ++f)
    out.morphism_map[static_cast<size_t>(f)] =
        out.quotient.morphism_index(c.morphism_id(class_of[static_cast<size_t>(f)]));
  out.class_of = out.morphism_map;

  if (!out.quotient.is_endotrivial())
    throw CategoryError("IncompatibleQuotient", {}, "quotient has nontrivial endomorphisms");
  return out;
}

bool is_valid_functor(const FiniteCategory& c, const FiniteCategory& d,
                      const FunctorData& f) {
  std::vector<int> omap(static_cast<size_t>(c.object_count()), -1);
  std::vector<int> mmap(static_cast<size_t>(c.morphism_count()), -1);
  for (int x = 0; x < c.object_count(); ++x) {
    auto it = f.objects.find(c.object_id(x));
    if (it == f.objects.end()) return false;
    omap[static_cast<size_t>(x)] = d.object_index(it->second);
    if (omap[static_cast<size_t>(x)] < 0) return false;
  }
  for (int m = 0; m < c.morphism_count(); ++m) {
    auto it = f.morphisms.find(c.morphism_id(m));
    if (it == f.morphisms.end()) return false;
    mmap[static_cast<size_t>(m)] = d.morphism_index(it->second);
    if (mmap[static_cast<size_t>(m)] < 0) return false;
    if (d.dom(mmap[static_cast<size_t>(m)]) != omap[static_cast<size_t>(c.dom(m))] ||
        d.cod(mmap[static_cast<size_t>(m)]) != omap[static_cast<size_t>(c.cod(m))])
      return false;
  }
  for (int x = 0; x < c.object_count(); ++x)
    if (mmap[static_cast<size_t>(c.identity(x))] != d.identity(omap[static_cast<size_t>(x)]))
      return false;
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int m = 0; m < c.morphism_count(); ++m) {
      int gm = c.compose(g, m);
      if (gm < 0) continue;
      if (d.compose(mmap[static_cast<size_t>(g)], mmap[static_cast<size_t>(m)]) !=
          mmap[static_cast<size_t>(gm)])
        return false;
    }
  return true;
}

FunctorData quotient_functor(const Endotrivialization& e) {
  FunctorData f;
  for (int x = 0; x < e.source.object_count(); ++x)
    f.objects[e.source.object_id(x)] = e.source.object_id(x);
  for (int m = 0; m < e.source.morphism_count(); ++m)
    f.morphisms[e.source.morphism_id(m)] =
        e.quotient.morphism_id(e.morphism_map[static_cast<size_t>(m)]);
  return f;
}

bool check_universal_property(const Endotrivialization& e, const FiniteCategory& d,
                              const FunctorData& f) {
  if (!d.is_endotrivial()) return false;
  if (!is_valid_functor(e.source, d, f)) return false;

  // Surjectivity of the quotient functor forces the factorization pointwise:
  // a commuting functor must send [m] to F(m) for every representative m, so
  // the candidate space collapses to one map. Existence = that map is well
  // defined and functorial; uniqueness follows from surjectivity.
  const FiniteCategory& q = e.quotient;
  std::vector<int> cand(static_cast<size_t>(q.morphism_count()), -1);
  for (int m = 0; m < e.source.morphism_count(); ++m) {
    int qm = e.morphism_map[static_cast<size_t>(m)];
    int fm = d.morphism_index(f.morphisms.at(e.source.morphism_id(m)));
    if (cand[static_cast<size_t>(qm)] >= 0 && cand[static_cast<size_t>(qm)] != fm)
      return false;  // F does not respect the equivalence classes
    cand[static_cast<size_t>(qm)] = fm;
  }
  FunctorData factor;
  for (int x = 0; x < q.object_count(); ++x)
    factor.objects[q.object_id(x)] = f.objects.at(q.object_id(x));
  for (int m = 0; m < q.morphism_count(); ++m)
    factor.morphisms[q.morphism_id(m)] = d.morphism_id(cand[static_cast<size_t>(m)]);
  return is_valid_functor(q, d, factor);
}

namespace {

bool morphism_bijections_work(const FiniteCategory& a, const FiniteCategory& b,
                              const std::vector<int>& obj_map) {
  const int n = a.object_count();
  struct HomSlot {
    std::vector<int> amor, bmor;
  };
  std::vector<HomSlot> slots;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      HomSlot s;
      s.amor = a.hom(x, y);
      s.bmor = b.hom(obj_map[static_cast<size_t>(x)], obj_map[static_cast<size_t>(y)]);
      if (s.amor.size() != s.bmor.size()) return false;
      if (!s.amor.empty()) slots.push_back(std::move(s));
    }
  std::vector<std::vector<int>> perms(slots.size());
  for (size_t i = 0; i < slots.size(); ++i) {
    perms[i].resize(slots[i].amor.size());
    std::iota(perms[i].begin(), perms[i].end(), 0);
  }
  std::vector<int> mor_map(static_cast<size_t>(a.morphism_count()), -1);
  while (true) {
    for (size_t i = 0; i < slots.size(); ++i)
      for (size_t j = 0; j < slots[i].amor.size(); ++j)
        mor_map[static_cast<size_t>(slots[i].amor[j])] =
            slots[i].bmor[static_cast<size_t>(perms[i][j])];
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = mor_map[static_cast<size_t>(a.identity(x))] ==
           b.identity(obj_map[static_cast<size_t>(x)]);
    for (int g = 0; g < a.morphism_count() && ok; ++g)
      for (int m = 0; m < a.morphism_count() && ok; ++m) {
        int gm = a.compose(g, m);
        if (gm < 0) continue;
        if (b.compose(mor_map[static_cast<size_t>(g)], mor_map[static_cast<size_t>(m)]) !=
            mor_map[static_cast<size_t>(gm)])
          ok = false;
      }
    if (ok) return true;
    size_t i = 0;
    for (; i < slots.size(); ++i)
      if (std::next_permutation(perms[i].begin(), perms[i].end())) break;
    if (i == slots.size()) return false;
  }
}

bool extend_object_bijection(const FiniteCategory& a, const FiniteCategory& b,
                             std::vector<int>& obj_map, size_t next) {
  const int n = a.object_count();
  if (next == static_cast<size_t>(n)) return morphism_bijections_work(a, b, obj_map);
  for (int y = 0; y < n; ++y) {
    bool used = false;
    for (size_t i = 0; i < next; ++i)
      if (obj_map[i] == y) used = true;
    if (used) continue;
    obj_map[next] = y;
    if (extend_object_bijection(a, b, obj_map, next + 1)) return true;
  }
  return false;
}

}  // namespace

bool categories_isomorphic(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count())
    return false;
  std::vector<int> obj_map(static_cast<size_t>(a.object_count()), -1);
  return extend_object_bijection(a, b, obj_map, 0);
}

}  // namespace eirep
