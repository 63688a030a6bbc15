#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eirep/corpus.hpp"
#include "eirep/fincat.hpp"

using namespace eirep;

namespace {

RawCategory terminal_raw() {
  RawCategory raw;
  raw.objects = {"x"};
  raw.morphisms = {{"1x", "x", "x"}};
  raw.identities = {{"x", "1x"}};
  raw.compose = {{"1x", "1x", "1x"}};
  return raw;
}

// two isomorphic objects with Z2 automorphism groups: the groupoid Z2 x (pair)
FiniteCategory z2_pair_groupoid() {
  RawCategory raw;
  raw.objects = {"u", "v"};
  raw.morphisms = {{"1u", "u", "u"}, {"au", "u", "u"}, {"1v", "v", "v"}, {"av", "v", "v"},
                   {"s", "u", "v"},  {"s2", "u", "v"}, {"t", "v", "u"},  {"t2", "v", "u"}};
  raw.identities = {{"u", "1u"}, {"v", "1v"}};
  // s2 = s∘au, t2 = t∘av; t is inverse of s
  auto add = [&](const std::string& g, const std::string& f, const std::string& gf) {
    raw.compose.push_back({g, f, gf});
  };
  // End(u) = {1u, au}, End(v) = {1v, av}
  add("1u", "1u", "1u"); add("1u", "au", "au"); add("au", "1u", "au"); add("au", "au", "1u");
  add("1v", "1v", "1v"); add("1v", "av", "av"); add("av", "1v", "av"); add("av", "av", "1v");
  // hom(u,v) = {s, s2}, hom(v,u) = {t, t2}
  add("s", "1u", "s"); add("s", "au", "s2"); add("s2", "1u", "s2"); add("s2", "au", "s");
  add("1v", "s", "s"); add("av", "s", "s2"); add("1v", "s2", "s2"); add("av", "s2", "s");
  add("t", "1v", "t"); add("t", "av", "t2"); add("t2", "1v", "t2"); add("t2", "av", "t");
  add("1u", "t", "t"); add("au", "t", "t2"); add("1u", "t2", "t2"); add("au", "t2", "t");
  // cross composites: t∘s = 1u, t∘s2 = au, etc.
  add("t", "s", "1u"); add("t", "s2", "au"); add("t2", "s", "au"); add("t2", "s2", "1u");
  add("s", "t", "1v"); add("s", "t2", "av"); add("s2", "t", "av"); add("s2", "t2", "1v");
  return FiniteCategory::validate(raw);
}

}  // namespace

TEST_CASE("terminal category validates") {
  auto c = FiniteCategory::validate(terminal_raw());
  CHECK(c.object_count() == 1);
  CHECK(c.morphism_count() == 1);
  CHECK(c.is_ei());
  CHECK(c.is_endotrivial());
}

TEST_CASE("constructed associativity violation is reported") {
  // one object, morphisms {1, a, b}: a∘a = b with broken associativity
  RawCategory raw;
  raw.objects = {"x"};
  raw.morphisms = {{"1", "x", "x"}, {"a", "x", "x"}, {"b", "x", "x"}};
  raw.identities = {{"x", "1"}};
  auto add = [&](const char* g, const char* f, const char* gf) {
    raw.compose.push_back({g, f, gf});
  };
  add("1", "1", "1"); add("1", "a", "a"); add("a", "1", "a");
  add("1", "b", "b"); add("b", "1", "b");
  add("a", "a", "b"); add("a", "b", "1"); add("b", "a", "a"); add("b", "b", "a");
  // (a∘a)∘a = b∘a = a but a∘(a∘a) = a∘b = 1
  try {
    FiniteCategory::validate(raw);
    FAIL("expected NonAssociative");
  } catch (const CategoryError& e) {
    CHECK(e.kind == "NonAssociative");
    CHECK(e.witnesses.size() == 3);
  }
}

TEST_CASE("missing composite is a DomainMismatch error") {
  auto raw = terminal_raw();
  raw.compose.clear();
  try {
    FiniteCategory::validate(raw);
    FAIL("expected DomainMismatch");
  } catch (const CategoryError& e) {
    CHECK(e.kind == "DomainMismatch");
  }
}

TEST_CASE("the category C' validates with 6 morphisms") {
  auto c = corpus::cyclic4_single_arrow();
  CHECK(c.object_count() == 2);
  CHECK(c.morphism_count() == 6);  // 4 + 1 identity at b + 1 arrow
  CHECK(c.is_ei());
  // gh = h: composing h with the generator absorbs it
  int h = c.morphism_index("h");
  int g1 = c.morphism_index("g");
  CHECK(c.compose(h, g1) == h);
}

TEST_CASE("is_ei accepts groups and path categories, rejects idempotent monoids") {
  CHECK(group_category(corpus::cyclic_group(2)).is_ei());
  CHECK(corpus::a2_path_category().is_ei());

  RawCategory raw;
  raw.objects = {"x"};
  raw.morphisms = {{"1", "x", "x"}, {"e", "x", "x"}};
  raw.identities = {{"x", "1"}};
  raw.compose = {{"1", "1", "1"}, {"1", "e", "e"}, {"e", "1", "e"}, {"e", "e", "e"}};
  auto c = FiniteCategory::validate(raw);
  CHECK_FALSE(c.is_ei());
  // equivalently: End(x) is not a group
}

TEST_CASE("is_ei equals all endomorphism monoids being groups") {
  for (auto& [name, c] : corpus::bundle()) {
    (void)name;
    bool all_groups = true;
    for (int x = 0; x < c.object_count(); ++x) {
      auto endo = c.endomorphisms(x);
      // closed by construction; group iff every element has two-sided inverse
      for (int f : endo)
        if (c.inverse(f) < 0) all_groups = false;
    }
    CHECK(c.is_ei() == all_groups);
  }
}

TEST_CASE("skeletalize: fixed point on skeletal input") {
  auto c = corpus::z2z2_case(1);
  auto sk = skeletalize(c);
  CHECK(sk.category.object_count() == c.object_count());
  CHECK(sk.category.morphism_count() == c.morphism_count());
  for (auto& [obj, rep] : sk.retraction) CHECK(obj == rep);
}

TEST_CASE("skeletalize merges isomorphic objects and keeps hom cardinalities") {
  auto c = z2_pair_groupoid();
  CHECK(c.is_ei());
  auto sk = skeletalize(c);
  CHECK(sk.category.object_count() == 1);
  // Aut of the representative is Z2
  CHECK(sk.category.morphism_count() == 2);
  int x = 0;
  auto endo = sk.category.endomorphisms(x);
  REQUIRE(endo.size() == 2);
  // representative is the lexicographically least object id
  CHECK(sk.retraction.at("u") == "u");
  CHECK(sk.retraction.at("v") == "u");
  // brute-force check: hom cardinalities between representatives preserved
  // |C(u,u)| = 2 in the original, matches the skeleton
  CHECK(c.hom(c.object_index("u"), c.object_index("u")).size() == 2);
}

TEST_CASE("skeletalize leaves non-isomorphic disjoint objects alone") {
  RawCategory raw;
  raw.objects = {"x", "y"};
  raw.morphisms = {{"1x", "x", "x"}, {"1y", "y", "y"}, {"gy", "y", "y"}};
  raw.identities = {{"x", "1x"}, {"y", "1y"}};
  raw.compose = {{"1x", "1x", "1x"}, {"1y", "1y", "1y"}, {"1y", "gy", "gy"},
                 {"gy", "1y", "gy"}, {"gy", "gy", "1y"}};
  auto c = FiniteCategory::validate(raw);
  auto sk = skeletalize(c);
  CHECK(sk.category.object_count() == 2);
  CHECK(sk.category.morphism_count() == 3);
}

TEST_CASE("object poset of paths, groups, and the diamond") {
  auto a2 = corpus::a2_path_category();
  auto p = object_poset(a2);
  CHECK(p.elements.size() == 2);
  CHECK(p.is_chain());

  auto g = group_category(corpus::cyclic_group(3));
  auto pg = object_poset(g);
  CHECK(pg.elements.size() == 1);

  auto dia = object_poset(corpus::diamond_free_category());
  CHECK(dia.elements.size() == 4);
  CHECK_FALSE(dia.is_chain());
  // diamond: a below b, c; b, c below d; b, c incomparable
  int a = 0, b = 1, cc = 2, dd = 3;  // lexicographic object order a, b, c, d
  CHECK(dia.leq[a][b]);
  CHECK(dia.leq[a][cc]);
  CHECK(dia.leq[b][dd]);
  CHECK(dia.leq[cc][dd]);
  CHECK(dia.leq[a][dd]);
  CHECK_FALSE(dia.leq[b][cc]);
  CHECK_FALSE(dia.leq[cc][b]);
}

TEST_CASE("object_poset rejects non-skeletal input") {
  CHECK_THROWS_AS(object_poset(z2_pair_groupoid()), CategoryError);
}

TEST_CASE("hom actions of the Z2-Z2 cases") {
  // case (5): both actions free, one orbit of size 4
  auto c5 = corpus::z2z2_case(5);
  auto a5 = hom_action(c5, c5.object_index("x"), c5.object_index("y"));
  CHECK(a5.hom.size() == 4);
  auto p5 = action_properties(c5, a5);
  CHECK(p5.is_free);
  CHECK(p5.is_transitive);
  CHECK(p5.orbit_count == 1);

  // case (1): singleton hom set, trivial actions
  auto c1 = corpus::z2z2_case(1);
  auto a1 = hom_action(c1, c1.object_index("x"), c1.object_index("y"));
  CHECK(a1.hom.size() == 1);
  auto p1 = action_properties(c1, a1);
  CHECK_FALSE(p1.is_free);  // stabilizer is the whole Z2 x Z2
  CHECK(p1.orbit_count == 1);

  // case (2): one orbit but not free
  auto c2 = corpus::z2z2_case(2);
  auto p2 = action_properties(c2, hom_action(c2, 0, 1));
  CHECK_FALSE(p2.is_free);
  CHECK(p2.orbit_count == 1);

  // empty hom set
  auto g = group_category(corpus::cyclic_group(2));
  // build disjoint union via two-object with empty hom
  TwoObjectData d;
  d.G = corpus::cyclic_group(2);
  d.G.elements = {"1x", "f"};
  d.H = corpus::cyclic_group(2);
  d.H.elements = {"1y", "gg"};
  auto cd = two_object_category(d);
  auto pd = action_properties(cd, hom_action(cd, 0, 1));
  CHECK(pd.orbit_count == 0);
  CHECK_FALSE(pd.is_transitive);
  (void)g;
}

TEST_CASE("z2_z3 example: g trivial, h 3-cycle -> one orbit, not free") {
  auto c = corpus::z2_z3_example();
  auto a = hom_action(c, c.object_index("x"), c.object_index("y"));
  CHECK(a.hom.size() == 3);
  auto p = action_properties(c, a);
  CHECK_FALSE(p.is_free);
  CHECK(p.is_transitive);
  CHECK(p.orbit_count == 1);
}

TEST_CASE("left and right actions commute and permute on the corpus") {
  for (auto& [name, c] : corpus::bundle()) {
    (void)name;
    for (int x = 0; x < c.object_count(); ++x)
      for (int y = 0; y < c.object_count(); ++y) {
        if (x == y) continue;
        auto a = hom_action(c, x, y);
        const int nf = static_cast<int>(a.hom.size());
        for (size_t g = 0; g < a.aut_x.size(); ++g) {
          // permutation check
          std::vector<bool> seen(static_cast<size_t>(nf), false);
          for (int f = 0; f < nf; ++f) seen[static_cast<size_t>(a.right[g][static_cast<size_t>(f)])] = true;
          for (bool s : seen) CHECK(s);
          for (size_t h = 0; h < a.aut_y.size(); ++h)
            for (int f = 0; f < nf; ++f) {
              int lr = a.left[h][static_cast<size_t>(a.right[g][static_cast<size_t>(f)])];
              int rl = a.right[g][static_cast<size_t>(a.left[h][static_cast<size_t>(f)])];
              CHECK(lr == rl);
            }
        }
        // orbit sizes divide |Aut(x)| * |Aut(y)|
        auto p = action_properties(c, a);
        std::vector<int> sizes(static_cast<size_t>(p.orbit_count), 0);
        for (int f = 0; f < nf; ++f) ++sizes[static_cast<size_t>(p.orbit_of[static_cast<size_t>(f)])];
        for (int s : sizes)
          CHECK(static_cast<int>(a.aut_x.size() * a.aut_y.size()) % s == 0);
      }
  }
}

TEST_CASE("orbit count matches independent union-find over generator moves") {
  for (auto& [name, c] : corpus::bundle()) {
    (void)name;
    for (int x = 0; x < c.object_count(); ++x)
      for (int y = 0; y < c.object_count(); ++y) {
        if (x == y) continue;
        auto a = hom_action(c, x, y);
        const int nf = static_cast<int>(a.hom.size());
        if (nf == 0) continue;
        // union-find over single-generator moves (left and right separately)
        std::vector<int> parent(static_cast<size_t>(nf));
        for (int i = 0; i < nf; ++i) parent[static_cast<size_t>(i)] = i;
        auto find = [&](int v) {
          while (parent[static_cast<size_t>(v)] != v) v = parent[static_cast<size_t>(v)];
          return v;
        };
        auto unite = [&](int u, int v) { parent[static_cast<size_t>(find(u))] = find(v); };
        for (size_t g = 0; g < a.aut_x.size(); ++g)
          for (int f = 0; f < nf; ++f) unite(f, a.right[g][static_cast<size_t>(f)]);
        for (size_t h = 0; h < a.aut_y.size(); ++h)
          for (int f = 0; f < nf; ++f) unite(f, a.left[h][static_cast<size_t>(f)]);
        int roots = 0;
        for (int f = 0; f < nf; ++f)
          if (find(f) == f) ++roots;
        auto p = action_properties(c, a);
        CHECK(p.orbit_count == roots);
      }
  }
}

TEST_CASE("full subcategories") {
  auto c = corpus::z2_z3_example();
  // all objects: C itself
  auto full = c.full_subcategory({0, 1});
  CHECK(full.morphism_count() == c.morphism_count());
  // one object: the group category of Aut(x)
  int x = c.object_index("x");
  auto gx = c.full_subcategory({x});
  CHECK(gx.object_count() == 1);
  CHECK(gx.morphism_count() == 2);
  int y = c.object_index("y");
  auto gy = c.full_subcategory({y});
  CHECK(gy.morphism_count() == 3);
  // empty set
  auto empty = c.full_subcategory({});
  CHECK(empty.object_count() == 0);
  CHECK(empty.morphism_count() == 0);
  // nesting: sub of sub equals sub
  auto again = full.full_subcategory({full.object_index("x")});
  CHECK(again.morphism_count() == gx.morphism_count());
}

TEST_CASE("opposite category reverses and is involutive") {
  auto c = corpus::z2z2_case(3);
  auto op = c.opposite();
  CHECK(op.hom(op.object_index("y"), op.object_index("x")).size() ==
        c.hom(c.object_index("x"), c.object_index("y")).size());
  auto opop = op.opposite();
  CHECK(opop.to_raw().compose.size() == c.to_raw().compose.size());
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f)
      CHECK(c.compose(g, f) == opop.compose(g, f));
}

TEST_CASE("path category of the Kronecker quiver") {
  auto k = corpus::kronecker2_category();
  CHECK(k.morphism_count() == 4);  // two identities + two arrows
  CHECK(k.is_ei());
  CHECK(k.is_endotrivial());
}

TEST_CASE("oriented cycles are rejected by path_category") {
  CHECK_THROWS_AS(path_category({"v"}, {{"a", "v", "v"}}), CategoryError);
}
