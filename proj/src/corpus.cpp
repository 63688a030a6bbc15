#include "eirep/corpus.hpp"

namespace eirep::corpus {

CayleyTable trivial_group() {
  CayleyTable t;
  t.elements = {"1"};
  t.table = {{0}};
  return t;
}

CayleyTable cyclic_group(int n) {
  CayleyTable t;
  for (int i = 0; i < n; ++i) t.elements.push_back("g" + std::to_string(i));
  t.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.table[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
  return t;
}

CayleyTable klein_four() {
  CayleyTable t;
  t.elements = {"1", "a", "b", "ab"};
  t.table = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return t;
}

CayleyTable symmetric_3() {
  // permutations of {0,1,2} listed as: 1, (01), (02), (12), (012), (021)
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  CayleyTable t;
  t.elements = {"1", "s01", "s02", "s12", "r1", "r2"};
  t.table.assign(6, std::vector<int>(6));
  auto compose = [&](const std::array<int, 3>& a, const std::array<int, 3>& b) {
    // (a*b)(i) = a(b(i))
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i) c[static_cast<size_t>(i)] = a[static_cast<size_t>(b[static_cast<size_t>(i)])];
    return c;
  };
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      auto c = compose(perms[static_cast<size_t>(i)], perms[static_cast<size_t>(j)]);
      for (int k = 0; k < 6; ++k)
        if (perms[static_cast<size_t>(k)] == c) t.table[static_cast<size_t>(i)][static_cast<size_t>(j)] = k;
    }
  return t;
}

namespace {

CayleyTable prefixed(CayleyTable t, const std::string& prefix) {
  for (auto& e : t.elements) e = prefix + e;
  return t;
}

TwoObjectData z2z2_base(int hom_size) {
  TwoObjectData d;
  d.G = cyclic_group(2);
  d.G.elements = {"1x", "f"};
  d.H = cyclic_group(2);
  d.H.elements = {"1y", "g"};
  for (int i = 1; i <= hom_size; ++i) d.hom.push_back("i" + std::to_string(i));
  d.right_action.assign(static_cast<size_t>(hom_size), std::vector<int>(2));
  d.left_action.assign(static_cast<size_t>(hom_size), std::vector<int>(2));
  for (int f = 0; f < hom_size; ++f) {
    d.right_action[static_cast<size_t>(f)] = {f, f};
    d.left_action[static_cast<size_t>(f)] = {f, f};
  }
  return d;
}

}  // namespace

FiniteCategory z2z2_case(int which) {
  switch (which) {
    case 1: {
      auto d = z2z2_base(1);
      return two_object_category(d);
    }
    case 2: {
      auto d = z2z2_base(2);
      d.left_action[0] = {0, 1};  // g swaps i1, i2
      d.left_action[1] = {1, 0};
      return two_object_category(d);
    }
    case 3: {
      auto d = z2z2_base(2);
      d.right_action[0] = {0, 1};  // f swaps i1, i2
      d.right_action[1] = {1, 0};
      return two_object_category(d);
    }
    case 4: {
      auto d = z2z2_base(2);
      d.right_action[0] = {0, 1};
      d.right_action[1] = {1, 0};
      d.left_action[0] = {0, 1};
      d.left_action[1] = {1, 0};
      return two_object_category(d);
    }
    case 5: {
      auto d = z2z2_base(4);
      // i1∘f = i2, i3∘f = i4, g∘i1 = i3, g∘i2 = i4
      d.right_action[0] = {0, 1};
      d.right_action[1] = {1, 0};
      d.right_action[2] = {2, 3};
      d.right_action[3] = {3, 2};
      d.left_action[0] = {0, 2};
      d.left_action[1] = {1, 3};
      d.left_action[2] = {2, 0};
      d.left_action[3] = {3, 1};
      return two_object_category(d);
    }
    default:
      throw CategoryError("BadCase", {}, "z2z2_case expects 1..5");
  }
}

FiniteCategory z2_z3_example() {
  TwoObjectData d;
  d.G = cyclic_group(2);
  d.G.elements = {"1x", "g"};
  d.H = cyclic_group(3);
  d.H.elements = {"1y", "h", "h2"};
  d.hom = {"f1", "f2", "f3"};
  d.right_action = {{0, 0}, {1, 1}, {2, 2}};  // f_i ∘ g = f_i
  // h∘f1 = f2, h∘f2 = f3, h∘f3 = f1
  d.left_action = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  return two_object_category(d);
}

FiniteCategory cyclic4_free_arrows() {
  TwoObjectData d;
  d.G = cyclic_group(4);
  d.G.elements = {"1x", "f", "f2", "f3"};
  d.H = trivial_group();
  d.H.elements = {"1y"};
  d.hom = {"i1", "i2", "i3", "i4"};
  // i_k ∘ f = i_{k+1} cyclically, where f = g1
  d.right_action = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
  d.left_action = {{0}, {1}, {2}, {3}};
  return two_object_category(d);
}

FiniteCategory cyclic4_single_arrow() {
  TwoObjectData d;
  d.x = "a";
  d.y = "b";
  d.G = cyclic_group(4);
  d.G.elements = {"1a", "g", "g2", "g3"};
  d.H = trivial_group();
  d.H.elements = {"1b"};
  d.hom = {"h"};
  d.right_action = {{0, 0, 0, 0}};  // h∘g = h
  d.left_action = {{0}};
  return two_object_category(d);
}

FiniteCategory a2_path_category() {
  return path_category({"v1", "v2"}, {{"a", "v1", "v2"}});
}

FiniteCategory an_chain_category(int n) {
  std::vector<std::string> elems;
  for (int i = 1; i <= n; ++i) elems.push_back("p" + std::to_string(i));
  std::vector<std::vector<bool>> leq(static_cast<size_t>(n),
                                     std::vector<bool>(static_cast<size_t>(n), false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
  return poset_category(elems, leq);
}

FiniteCategory kronecker2_category() {
  return path_category({"v1", "v2"}, {{"a", "v1", "v2"}, {"b", "v1", "v2"}});
}

FiniteCategory diamond_poset_category() {
  // a <= b <= d, a <= c <= d
  std::vector<std::string> elems = {"a", "b", "c", "d"};
  std::vector<std::vector<bool>> leq = {
      {true, true, true, true},
      {false, true, false, true},
      {false, false, true, true},
      {false, false, false, true},
  };
  return poset_category(elems, leq);
}

FiniteCategory diamond_free_category() {
  // the square quiver without the commutativity relation: two distinct
  // composites a -> d
  return path_category({"a", "b", "c", "d"},
                       {{"al", "a", "b"}, {"be", "a", "c"}, {"ga", "b", "d"}, {"de", "c", "d"}});
}

FiniteCategory single_morphism_category(const CayleyTable& g, const CayleyTable& h) {
  TwoObjectData d;
  d.G = prefixed(g, "x:");
  d.H = prefixed(h, "y:");
  d.hom = {"f"};
  d.right_action = {std::vector<int>(static_cast<size_t>(g.order()), 0)};
  d.left_action = {std::vector<int>(static_cast<size_t>(h.order()), 0)};
  return two_object_category(d);
}

FiniteCategory free_transitive_category(const CayleyTable& g, const CayleyTable& h) {
  TwoObjectData d;
  d.G = prefixed(g, "x:");
  d.H = prefixed(h, "y:");
  const int ng = g.order(), nh = h.order();
  // hom elements indexed by pairs (a, b): f_{a,b} = b ∘ f0 ∘ a
  auto idx = [&](int a, int b) { return a * nh + b; };
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b)
      d.hom.push_back("f_" + g.elements[static_cast<size_t>(a)] + "_" +
                      h.elements[static_cast<size_t>(b)]);
  d.right_action.assign(static_cast<size_t>(ng * nh), std::vector<int>(static_cast<size_t>(ng)));
  d.left_action.assign(static_cast<size_t>(ng * nh), std::vector<int>(static_cast<size_t>(nh)));
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b) {
      for (int c = 0; c < ng; ++c)
        d.right_action[static_cast<size_t>(idx(a, b))][static_cast<size_t>(c)] =
            idx(g.table[static_cast<size_t>(a)][static_cast<size_t>(c)], b);
      for (int c = 0; c < nh; ++c)
        d.left_action[static_cast<size_t>(idx(a, b))][static_cast<size_t>(c)] =
            idx(a, h.table[static_cast<size_t>(c)][static_cast<size_t>(b)]);
    }
  return two_object_category(d);
}

std::vector<std::pair<std::string, FiniteCategory>> bundle() {
  std::vector<std::pair<std::string, FiniteCategory>> out;
  for (int i = 1; i <= 5; ++i)
    out.emplace_back("case" + std::to_string(i), z2z2_case(i));
  out.emplace_back("z2_z3", z2_z3_example());
  out.emplace_back("c", cyclic4_free_arrows());
  out.emplace_back("c_prime", cyclic4_single_arrow());
  out.emplace_back("a2", a2_path_category());
  out.emplace_back("kronecker", kronecker2_category());
  out.emplace_back("chain3", an_chain_category(3));
  out.emplace_back("diamond_poset", diamond_poset_category());
  out.emplace_back("diamond_free", diamond_free_category());
  out.emplace_back("group_z2", group_category(cyclic_group(2)));
  out.emplace_back("group_z3", group_category(cyclic_group(3)));
  out.emplace_back("group_z4", group_category(cyclic_group(4)));
  out.emplace_back("group_klein", group_category(klein_four()));
  out.emplace_back("group_s3", group_category(symmetric_3()));
  out.emplace_back("single_z2_z3", single_morphism_category(cyclic_group(2), cyclic_group(3)));
  out.emplace_back("free_z2_s3", free_transitive_category(cyclic_group(2), symmetric_3()));
  return out;
}

}  // namespace eirep::corpus
