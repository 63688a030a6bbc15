#include "eirep/fincat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace eirep {

namespace {

int find_id(const std::vector<std::string>& ids, const std::string& id) {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return -1;
  return static_cast<int>(it - ids.begin());
}

}  // namespace

FiniteCategory assemble_category(std::vector<std::string> objects,
                                 std::vector<std::string> mor_ids,
                                 std::vector<int> dom, std::vector<int> cod,
                                 std::vector<int> identity,
                                 std::vector<int> table) {
  FiniteCategory c;
  c.objects_ = std::move(objects);
  c.mor_ids_ = std::move(mor_ids);
  c.dom_ = std::move(dom);
  c.cod_ = std::move(cod);
  c.identity_ = std::move(identity);
  c.table_ = std::move(table);
  return c;
}

int FiniteCategory::object_index(const std::string& id) const {
  return find_id(objects_, id);
}

int FiniteCategory::morphism_index(const std::string& id) const {
  return find_id(mor_ids_, id);
}

std::vector<int> FiniteCategory::hom(int x, int y) const {
  std::vector<int> out;
  for (int f = 0; f < morphism_count(); ++f)
    if (dom(f) == x && cod(f) == y) out.push_back(f);
  return out;
}

int FiniteCategory::inverse(int f) const {
  int x = dom(f), y = cod(f);
  for (int g : hom(y, x))
    if (compose(g, f) == identity(x) && compose(f, g) == identity(y)) return g;
  return -1;
}

bool FiniteCategory::is_ei() const {
  for (int f = 0; f < morphism_count(); ++f)
    if (dom(f) == cod(f) && inverse(f) < 0) return false;
  return true;
}

bool FiniteCategory::is_endotrivial() const {
  for (int f = 0; f < morphism_count(); ++f)
    if (dom(f) == cod(f) && !is_identity(f)) return false;
  return true;
}

FiniteCategory FiniteCategory::validate(const RawCategory& raw) {
  // unique, sorted object and morphism ids
  std::vector<std::string> objects = raw.objects;
  std::sort(objects.begin(), objects.end());
  if (std::adjacent_find(objects.begin(), objects.end()) != objects.end())
    throw CategoryError("DuplicateId", {}, "duplicate object id");

  std::vector<MorphismDecl> mors = raw.morphisms;
  std::sort(mors.begin(), mors.end(),
            [](const MorphismDecl& a, const MorphismDecl& b) { return a.id < b.id; });
  std::vector<std::string> mor_ids;
  for (auto& m : mors) mor_ids.push_back(m.id);
  if (std::adjacent_find(mor_ids.begin(), mor_ids.end()) != mor_ids.end())
    throw CategoryError("DuplicateId", {}, "duplicate morphism id");

  const int nm = static_cast<int>(mors.size());
  const size_t nms = static_cast<size_t>(nm);
  std::vector<int> dom(nms), cod(nms);
  for (int f = 0; f < nm; ++f) {
    dom[static_cast<size_t>(f)] = find_id(objects, mors[static_cast<size_t>(f)].dom);
    cod[static_cast<size_t>(f)] = find_id(objects, mors[static_cast<size_t>(f)].cod);
    if (dom[static_cast<size_t>(f)] < 0 || cod[static_cast<size_t>(f)] < 0)
      throw CategoryError("UnknownObject", {mors[static_cast<size_t>(f)].id},
                          "morphism references unknown object");
  }

  std::vector<int> identity(objects.size(), -1);
  for (auto& [obj, mid] : raw.identities) {
    int x = find_id(objects, obj);
    int f = find_id(mor_ids, mid);
    if (x < 0 || f < 0)
      throw CategoryError("UnknownId", {obj, mid}, "identity entry references unknown id");
    identity[static_cast<size_t>(x)] = f;
    if (dom[static_cast<size_t>(f)] != x || cod[static_cast<size_t>(f)] != x)
      throw CategoryError("IdentityViolation", {mid}, "identity is not an endomorphism");
  }
  for (size_t x = 0; x < objects.size(); ++x)
    if (identity[x] < 0)
      throw CategoryError("MissingIdentity", {objects[x]}, "object without identity");

  std::vector<int> table(nms * nms, -1);
  for (auto& tr : raw.compose) {
    int g = find_id(mor_ids, tr[0]);
    int f = find_id(mor_ids, tr[1]);
    int gf = find_id(mor_ids, tr[2]);
    if (g < 0 || f < 0 || gf < 0)
      throw CategoryError("UnknownId", {tr[0], tr[1], tr[2]},
                          "compose entry references unknown morphism");
    if (cod[static_cast<size_t>(f)] != dom[static_cast<size_t>(g)])
      throw CategoryError("DomainMismatch", {tr[0], tr[1]},
                          "compose entry for a non-composable pair");
    table[static_cast<size_t>(g) * nms + static_cast<size_t>(f)] = gf;
  }

  // totality and typing of composites
  for (int g = 0; g < nm; ++g) {
    for (int f = 0; f < nm; ++f) {
      if (cod[static_cast<size_t>(f)] != dom[static_cast<size_t>(g)]) continue;
      int gf = table[static_cast<size_t>(g) * nms + static_cast<size_t>(f)];
      if (gf < 0)
        throw CategoryError("DomainMismatch",
                            {mor_ids[static_cast<size_t>(g)], mor_ids[static_cast<size_t>(f)]},
                            "missing composite for composable pair");
      if (dom[static_cast<size_t>(gf)] != dom[static_cast<size_t>(f)] ||
          cod[static_cast<size_t>(gf)] != cod[static_cast<size_t>(g)])
        throw CategoryError("DomainMismatch",
                            {mor_ids[static_cast<size_t>(g)], mor_ids[static_cast<size_t>(f)]},
                            "composite has wrong domain or codomain");
    }
  }

  FiniteCategory c = assemble_category(objects, mor_ids, dom, cod, identity, table);

  // identity laws
  for (int f = 0; f < nm; ++f) {
    if (c.compose(c.identity(c.cod(f)), f) != f || c.compose(f, c.identity(c.dom(f))) != f)
      throw CategoryError("IdentityViolation", {mor_ids[static_cast<size_t>(f)]},
                          "identity law fails");
  }

  // associativity on all composable triples
  for (int h = 0; h < nm; ++h) {
    for (int g = 0; g < nm; ++g) {
      if (c.cod(g) != c.dom(h)) continue;
      int hg = c.compose(h, g);
      for (int f = 0; f < nm; ++f) {
        if (c.cod(f) != c.dom(g)) continue;
        int gf = c.compose(g, f);
        if (c.compose(h, gf) != c.compose(hg, f))
          throw CategoryError("NonAssociative",
                              {mor_ids[static_cast<size_t>(h)],
                               mor_ids[static_cast<size_t>(g)],
                               mor_ids[static_cast<size_t>(f)]},
                              "associativity fails");
      }
    }
  }
  return c;
}

FiniteCategory FiniteCategory::full_subcategory(const std::vector<int>& objs) const {
  std::set<int> keep(objs.begin(), objs.end());
  RawCategory raw;
  for (int x : keep) raw.objects.push_back(object_id(x));
  std::set<int> mors;
  for (int f = 0; f < morphism_count(); ++f)
    if (keep.count(dom(f)) && keep.count(cod(f))) mors.insert(f);
  for (int f : mors)
    raw.morphisms.push_back({morphism_id(f), object_id(dom(f)), object_id(cod(f))});
  for (int x : keep) raw.identities[object_id(x)] = morphism_id(identity(x));
  for (int g : mors)
    for (int f : mors) {
      int gf = compose(g, f);
      if (gf >= 0)
        raw.compose.push_back({morphism_id(g), morphism_id(f), morphism_id(gf)});
    }
  return validate(raw);
}

FiniteCategory FiniteCategory::opposite() const {
  RawCategory raw;
  raw.objects = objects_;
  for (int f = 0; f < morphism_count(); ++f)
    raw.morphisms.push_back({morphism_id(f), object_id(cod(f)), object_id(dom(f))});
  for (int x = 0; x < object_count(); ++x)
    raw.identities[object_id(x)] = morphism_id(identity(x));
  for (int g = 0; g < morphism_count(); ++g)
    for (int f = 0; f < morphism_count(); ++f) {
      int gf = compose(g, f);
      if (gf >= 0)
        raw.compose.push_back({morphism_id(f), morphism_id(g), morphism_id(gf)});
    }
  return validate(raw);
}

RawCategory FiniteCategory::to_raw() const {
  RawCategory raw;
  raw.objects = objects_;
  for (int f = 0; f < morphism_count(); ++f)
    raw.morphisms.push_back({morphism_id(f), object_id(dom(f)), object_id(cod(f))});
  for (int x = 0; x < object_count(); ++x)
    raw.identities[object_id(x)] = morphism_id(identity(x));
  for (int g = 0; g < morphism_count(); ++g)
    for (int f = 0; f < morphism_count(); ++f) {
      int gf = compose(g, f);
      if (gf >= 0)
        raw.compose.push_back({morphism_id(g), morphism_id(f), morphism_id(gf)});
    }
  return raw;
}

// ---------------------------------------------------------------------------
// Cayley tables

int CayleyTable::identity_index() const {
  int n = order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = table[static_cast<size_t>(e)][static_cast<size_t>(a)] == a &&
           table[static_cast<size_t>(a)][static_cast<size_t>(e)] == a;
    if (ok) return e;
  }
  return -1;
}

void CayleyTable::validate() const {
  int n = order();
  if (n == 0) throw CategoryError("NotAGroup", {}, "empty group table");
  if (static_cast<int>(table.size()) != n)
    throw CategoryError("NotAGroup", {}, "table size mismatch");
  for (auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw CategoryError("NotAGroup", {}, "table row size mismatch");
    for (int v : row)
      if (v < 0 || v >= n) throw CategoryError("NotAGroup", {}, "table entry out of range");
  }
  if (identity_index() < 0) throw CategoryError("NotAGroup", {}, "no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int ab = table[static_cast<size_t>(a)][static_cast<size_t>(b)];
        int bc = table[static_cast<size_t>(b)][static_cast<size_t>(c)];
        if (table[static_cast<size_t>(ab)][static_cast<size_t>(c)] !=
            table[static_cast<size_t>(a)][static_cast<size_t>(bc)])
          throw CategoryError("NotAGroup",
                              {elements[static_cast<size_t>(a)],
                               elements[static_cast<size_t>(b)],
                               elements[static_cast<size_t>(c)]},
                              "associativity fails");
      }
  for (int a = 0; a < n; ++a)
    if (inverse_of(a) < 0)
      throw CategoryError("NotAGroup", {elements[static_cast<size_t>(a)]}, "no inverse");
}

int CayleyTable::inverse_of(int i) const {
  int e = identity_index();
  for (int j = 0; j < order(); ++j)
    if (table[static_cast<size_t>(i)][static_cast<size_t>(j)] == e &&
        table[static_cast<size_t>(j)][static_cast<size_t>(i)] == e)
      return j;
  return -1;
}

int CayleyTable::element_order(int i) const {
  int e = identity_index();
  int cur = i, ord = 1;
  while (cur != e) {
    cur = table[static_cast<size_t>(cur)][static_cast<size_t>(i)];
    ++ord;
  }
  return ord;
}

FiniteCategory group_category(const CayleyTable& g, const std::string& object) {
  g.validate();
  RawCategory raw;
  raw.objects = {object};
  for (auto& e : g.elements) raw.morphisms.push_back({e, object, object});
  raw.identities[object] = g.elements[static_cast<size_t>(g.identity_index())];
  // composition a∘b follows the Cayley product a*b
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      raw.compose.push_back(
          {g.elements[static_cast<size_t>(a)], g.elements[static_cast<size_t>(b)],
           g.elements[static_cast<size_t>(g.table[static_cast<size_t>(a)][static_cast<size_t>(b)])]});
  return FiniteCategory::validate(raw);
}

FiniteCategory two_object_category(const TwoObjectData& d) {
  d.G.validate();
  d.H.validate();
  const int ng = d.G.order(), nh = d.H.order(), nf = static_cast<int>(d.hom.size());
  if (static_cast<int>(d.right_action.size()) != nf ||
      static_cast<int>(d.left_action.size()) != nf)
    throw CategoryError("BadAction", {}, "action table size mismatch");
  for (auto& row : d.right_action)
    if (static_cast<int>(row.size()) != ng)
      throw CategoryError("BadAction", {}, "right action row size mismatch");
  for (auto& row : d.left_action)
    if (static_cast<int>(row.size()) != nh)
      throw CategoryError("BadAction", {}, "left action row size mismatch");

  auto ra = [&](int f, int g) { return d.right_action[static_cast<size_t>(f)][static_cast<size_t>(g)]; };
  auto la = [&](int f, int h) { return d.left_action[static_cast<size_t>(f)][static_cast<size_t>(h)]; };

  // action axioms: identity fixes, compatibility with the group product, the
  // two actions commute
  int eg = d.G.identity_index(), eh = d.H.identity_index();
  for (int f = 0; f < nf; ++f) {
    if (ra(f, eg) != f || la(f, eh) != f)
      throw CategoryError("BadAction", {d.hom[static_cast<size_t>(f)]},
                          "identity does not act trivially");
    for (int a = 0; a < ng; ++a)
      for (int b = 0; b < ng; ++b) {
        // (f∘a)∘b = f∘(a*b)
        if (ra(ra(f, a), b) != ra(f, d.G.table[static_cast<size_t>(a)][static_cast<size_t>(b)]))
          throw CategoryError("BadAction", {d.hom[static_cast<size_t>(f)]},
                              "right action not compatible with the group product");
      }
    for (int a = 0; a < nh; ++a)
      for (int b = 0; b < nh; ++b) {
        // a∘(b∘f) = (a*b)∘f
        if (la(la(f, b), a) != la(f, d.H.table[static_cast<size_t>(a)][static_cast<size_t>(b)]))
          throw CategoryError("BadAction", {d.hom[static_cast<size_t>(f)]},
                              "left action not compatible with the group product");
      }
    for (int a = 0; a < ng; ++a)
      for (int b = 0; b < nh; ++b)
        if (la(ra(f, a), b) != ra(la(f, b), a))
          throw CategoryError("BadAction", {d.hom[static_cast<size_t>(f)]},
                              "left and right actions do not commute");
  }

  RawCategory raw;
  raw.objects = {d.x, d.y};
  for (auto& e : d.G.elements) raw.morphisms.push_back({e, d.x, d.x});
  for (auto& e : d.H.elements) raw.morphisms.push_back({e, d.y, d.y});
  for (auto& f : d.hom) raw.morphisms.push_back({f, d.x, d.y});
  raw.identities[d.x] = d.G.elements[static_cast<size_t>(eg)];
  raw.identities[d.y] = d.H.elements[static_cast<size_t>(eh)];
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b)
      raw.compose.push_back(
          {d.G.elements[static_cast<size_t>(a)], d.G.elements[static_cast<size_t>(b)],
           d.G.elements[static_cast<size_t>(d.G.table[static_cast<size_t>(a)][static_cast<size_t>(b)])]});
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b)
      raw.compose.push_back(
          {d.H.elements[static_cast<size_t>(a)], d.H.elements[static_cast<size_t>(b)],
           d.H.elements[static_cast<size_t>(d.H.table[static_cast<size_t>(a)][static_cast<size_t>(b)])]});
  for (int f = 0; f < nf; ++f) {
    for (int a = 0; a < ng; ++a)
      raw.compose.push_back({d.hom[static_cast<size_t>(f)], d.G.elements[static_cast<size_t>(a)],
                             d.hom[static_cast<size_t>(ra(f, a))]});
    for (int b = 0; b < nh; ++b)
      raw.compose.push_back({d.H.elements[static_cast<size_t>(b)], d.hom[static_cast<size_t>(f)],
                             d.hom[static_cast<size_t>(la(f, b))]});
  }
  return FiniteCategory::validate(raw);
}

FiniteCategory poset_category(const std::vector<std::string>& elements,
                              const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(elements.size());
  for (int i = 0; i < n; ++i) {
    if (!leq[static_cast<size_t>(i)][static_cast<size_t>(i)])
      throw CategoryError("NotAPartialOrder", {elements[static_cast<size_t>(i)]}, "not reflexive");
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
          leq[static_cast<size_t>(j)][static_cast<size_t>(i)])
        throw CategoryError("NotAPartialOrder",
                            {elements[static_cast<size_t>(i)], elements[static_cast<size_t>(j)]},
                            "not antisymmetric");
      for (int k = 0; k < n; ++k)
        if (leq[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
            leq[static_cast<size_t>(j)][static_cast<size_t>(k)] &&
            !leq[static_cast<size_t>(i)][static_cast<size_t>(k)])
          throw CategoryError("NotAPartialOrder",
                              {elements[static_cast<size_t>(i)], elements[static_cast<size_t>(j)],
                               elements[static_cast<size_t>(k)]},
                              "not transitive");
    }
  }
  RawCategory raw;
  raw.objects = elements;
  auto arrow_id = [&](int i, int j) {
    return elements[static_cast<size_t>(i)] + "<=" + elements[static_cast<size_t>(j)];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[static_cast<size_t>(i)][static_cast<size_t>(j)])
        raw.morphisms.push_back(
            {arrow_id(i, j), elements[static_cast<size_t>(i)], elements[static_cast<size_t>(j)]});
  for (int i = 0; i < n; ++i) raw.identities[elements[static_cast<size_t>(i)]] = arrow_id(i, i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (leq[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
            leq[static_cast<size_t>(j)][static_cast<size_t>(k)])
          raw.compose.push_back({arrow_id(j, k), arrow_id(i, j), arrow_id(i, k)});
  return FiniteCategory::validate(raw);
}

FiniteCategory path_category(const std::vector<std::string>& vertices,
                             const std::vector<MorphismDecl>& arrows) {
  struct Path {
    std::string dom, cod;
    std::vector<int> arrows;  // first applied first
  };
  auto path_name = [&](const std::vector<int>& as, const std::string& v) {
    if (as.empty()) return "e_" + v;
    std::string s;
    for (size_t i = as.size(); i-- > 0;) {
      s += arrows[static_cast<size_t>(as[i])].id;
      if (i > 0) s += "*";
    }
    return s;
  };
  std::vector<Path> paths;
  for (auto& v : vertices) paths.push_back({v, v, {}});
  size_t frontier_begin = 0;
  size_t rounds = 0;
  while (frontier_begin < paths.size()) {
    size_t frontier_end = paths.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (size_t a = 0; a < arrows.size(); ++a) {
        if (arrows[a].dom != paths[i].cod) continue;
        Path ext;
        ext.arrows = paths[i].arrows;
        ext.arrows.push_back(static_cast<int>(a));
        ext.dom = paths[i].dom;
        ext.cod = arrows[a].cod;
        paths.push_back(std::move(ext));
      }
    }
    frontier_begin = frontier_end;
    if (++rounds > arrows.size() + 2)
      throw CategoryError("NotAcyclic", {}, "quiver has an oriented cycle");
  }
  RawCategory raw;
  raw.objects = vertices;
  for (auto& p : paths)
    raw.morphisms.push_back({path_name(p.arrows, p.dom), p.dom, p.cod});
  for (auto& v : vertices) raw.identities[v] = "e_" + v;
  for (auto& q : paths)
    for (auto& p : paths) {
      if (p.cod != q.dom) continue;
      std::vector<int> comp = p.arrows;
      comp.insert(comp.end(), q.arrows.begin(), q.arrows.end());
      raw.compose.push_back({path_name(q.arrows, q.dom), path_name(p.arrows, p.dom),
                             path_name(comp, p.dom)});
    }
  return FiniteCategory::validate(raw);
}

// ---------------------------------------------------------------------------

bool ObjectPoset::is_chain() const {
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t j = 0; j < elements.size(); ++j)
      if (!leq[i][j] && !leq[j][i]) return false;
  return true;
}

std::vector<std::vector<int>> ObjectPoset::components() const {
  int n = static_cast<int>(elements.size());
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int> stack = {s};
    comp[static_cast<size_t>(s)] = nc;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (comp[static_cast<size_t>(w)] >= 0) continue;
        if (leq[static_cast<size_t>(v)][static_cast<size_t>(w)] ||
            leq[static_cast<size_t>(w)][static_cast<size_t>(v)]) {
          comp[static_cast<size_t>(w)] = nc;
          stack.push_back(w);
        }
      }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(static_cast<size_t>(nc));
  for (int v = 0; v < n; ++v)
    out[static_cast<size_t>(comp[static_cast<size_t>(v)])].push_back(v);
  return out;
}

bool ObjectPoset::is_disjoint_union_of_chains() const {
  for (auto& comp : components())
    for (int a : comp)
      for (int b : comp)
        if (!leq[static_cast<size_t>(a)][static_cast<size_t>(b)] &&
            !leq[static_cast<size_t>(b)][static_cast<size_t>(a)])
          return false;
  return true;
}

ObjectPoset object_poset(const FiniteCategory& c) {
  int n = c.object_count();
  ObjectPoset p;
  for (int x = 0; x < n; ++x) p.elements.push_back(c.object_id(x));
  p.leq.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      p.leq[static_cast<size_t>(x)][static_cast<size_t>(y)] = !c.hom(x, y).empty();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && p.leq[static_cast<size_t>(x)][static_cast<size_t>(y)] &&
          p.leq[static_cast<size_t>(y)][static_cast<size_t>(x)])
        throw CategoryError("NotAPartialOrder", {c.object_id(x), c.object_id(y)},
                            "hom-nonemptiness not antisymmetric (non-skeletal or non-EI input)");
  return p;
}

HomAction hom_action(const FiniteCategory& c, int x, int y) {
  HomAction a;
  a.x = x;
  a.y = y;
  a.hom = c.hom(x, y);
  a.aut_x = c.endomorphisms(x);
  a.aut_y = c.endomorphisms(y);
  auto hom_pos = [&](int f) {
    return static_cast<int>(std::lower_bound(a.hom.begin(), a.hom.end(), f) - a.hom.begin());
  };
  a.right.assign(a.aut_x.size(), std::vector<int>(a.hom.size()));
  a.left.assign(a.aut_y.size(), std::vector<int>(a.hom.size()));
  for (size_t g = 0; g < a.aut_x.size(); ++g)
    for (size_t f = 0; f < a.hom.size(); ++f)
      a.right[g][f] = hom_pos(c.compose(a.hom[f], a.aut_x[g]));
  for (size_t h = 0; h < a.aut_y.size(); ++h)
    for (size_t f = 0; f < a.hom.size(); ++f)
      a.left[h][f] = hom_pos(c.compose(a.aut_y[h], a.hom[f]));
  return a;
}

ActionProperties action_properties(const FiniteCategory& c, const HomAction& a) {
  ActionProperties out;
  const int nf = static_cast<int>(a.hom.size());
  const int ng = static_cast<int>(a.aut_x.size());
  const int nh = static_cast<int>(a.aut_y.size());

  std::vector<int> inv_g(static_cast<size_t>(ng));
  for (int g = 0; g < ng; ++g) {
    int inv = c.inverse(a.aut_x[static_cast<size_t>(g)]);
    auto it = std::lower_bound(a.aut_x.begin(), a.aut_x.end(), inv);
    inv_g[static_cast<size_t>(g)] = static_cast<int>(it - a.aut_x.begin());
  }
  int id_g = 0, id_h = 0;
  for (int g = 0; g < ng; ++g)
    if (c.is_identity(a.aut_x[static_cast<size_t>(g)])) id_g = g;
  for (int h = 0; h < nh; ++h)
    if (c.is_identity(a.aut_y[static_cast<size_t>(h)])) id_h = h;

  // product action (g,h)·f = h ∘ f ∘ g^{-1}
  auto act = [&](int g, int h, int f) {
    int fg = a.right[static_cast<size_t>(inv_g[static_cast<size_t>(g)])][static_cast<size_t>(f)];
    return a.left[static_cast<size_t>(h)][static_cast<size_t>(fg)];
  };

  out.is_free = true;
  for (int f = 0; f < nf && out.is_free; ++f)
    for (int g = 0; g < ng && out.is_free; ++g)
      for (int h = 0; h < nh; ++h) {
        if (g == id_g && h == id_h) continue;
        if (act(g, h, f) == f) {
          out.is_free = false;
          break;
        }
      }

  out.orbit_of.assign(static_cast<size_t>(nf), -1);
  int orbits = 0;
  for (int s = 0; s < nf; ++s) {
    if (out.orbit_of[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int> stack = {s};
    out.orbit_of[static_cast<size_t>(s)] = orbits;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int g = 0; g < ng; ++g)
        for (int h = 0; h < nh; ++h) {
          int f2 = act(g, h, f);
          if (out.orbit_of[static_cast<size_t>(f2)] < 0) {
            out.orbit_of[static_cast<size_t>(f2)] = orbits;
            stack.push_back(f2);
          }
        }
    }
    ++orbits;
  }
  out.orbit_count = orbits;
  out.is_transitive = (nf > 0 && orbits == 1);
  if (nf == 0) out.is_free = true;
  return out;
}

bool objects_isomorphic(const FiniteCategory& c, int x, int y) {
  if (x == y) return true;
  int x_id = c.identity(x), y_id = c.identity(y);
  for (int f : c.hom(x, y))
    for (int g : c.hom(y, x))
      if (c.compose(g, f) == x_id && c.compose(f, g) == y_id) return true;
  return false;
}

Skeletalization skeletalize(const FiniteCategory& c) {
  const int n = c.object_count();
  Skeletalization out;
  out.representative.assign(static_cast<size_t>(n), -1);
  // objects are stored in lexicographic id order, so the least index in an
  // isomorphism class has the least id
  for (int x = 0; x < n; ++x) {
    if (out.representative[static_cast<size_t>(x)] >= 0) continue;
    out.representative[static_cast<size_t>(x)] = x;
    for (int y = x + 1; y < n; ++y)
      if (out.representative[static_cast<size_t>(y)] < 0 && objects_isomorphic(c, x, y))
        out.representative[static_cast<size_t>(y)] = x;
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (out.representative[static_cast<size_t>(x)] == x) reps.push_back(x);
  out.category = c.full_subcategory(reps);
  for (int x = 0; x < n; ++x)
    out.retraction[c.object_id(x)] = c.object_id(out.representative[static_cast<size_t>(x)]);
  return out;
}

}  // namespace eirep
