#include "eirep/presentations.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace eirep {

int QuiverPresentation::vertex_index(const std::string& id) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == id) return static_cast<int>(i);
  return -1;
}

int QuiverPresentation::arrow_index(const std::string& id) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == id) return static_cast<int>(i);
  return -1;
}

std::vector<int> QuiverPresentation::expand_path(
    const std::vector<std::string>& path) const {
  std::vector<int> out;
  for (auto& entry : path) {
    std::string name = entry;
    int power = 1;
    auto caret = entry.find('^');
    if (caret != std::string::npos) {
      name = entry.substr(0, caret);
      power = std::stoi(entry.substr(caret + 1));
      if (power < 1) throw AlgebraError("BadPresentation", "exponent must be >= 1");
    }
    int a = arrow_index(name);
    if (a < 0) throw AlgebraError("BadPresentation", "unknown arrow " + name);
    for (int i = 0; i < power; ++i) out.push_back(a);
  }
  return out;
}

void QuiverPresentation::validate() const {
  std::set<std::string> seen;
  for (auto& v : vertices)
    if (!seen.insert(v).second)
      throw AlgebraError("BadPresentation", "duplicate vertex " + v);
  for (auto& a : arrows) {
    if (!seen.insert(a.id).second)
      throw AlgebraError("BadPresentation", "duplicate id " + a.id);
    if (vertex_index(a.src) < 0 || vertex_index(a.tgt) < 0)
      throw AlgebraError("BadPresentation", "arrow " + a.id + " has unknown endpoint");
  }
  for (auto& rel : relations) {
    if (rel.empty()) throw AlgebraError("BadPresentation", "empty relation");
    int src = -1, tgt = -1;
    for (auto& term : rel) {
      auto seq = expand_path(term.path);
      if (seq.size() < 2)
        throw AlgebraError("BadPresentation",
                           "relation term shorter than 2 arrows (not admissible)");
      // composition order: seq[k+1] is applied before seq[k]
      for (size_t k = 0; k + 1 < seq.size(); ++k)
        if (arrows[static_cast<size_t>(seq[k])].src !=
            arrows[static_cast<size_t>(seq[k + 1])].tgt)
          throw AlgebraError("BadPresentation", "relation path does not compose");
      int s = vertex_index(arrows[static_cast<size_t>(seq.back())].src);
      int t = vertex_index(arrows[static_cast<size_t>(seq.front())].tgt);
      if (src < 0) {
        src = s;
        tgt = t;
      } else if (src != s || tgt != t) {
        throw AlgebraError("BadPresentation",
                           "relation terms do not share source and target");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// presented_algebra

namespace {

struct PathTable {
  struct P {
    int src, tgt;
    std::vector<int> arrows;  // composition order: arrows[0] applied last
  };
  std::vector<P> paths;  // paths[v] = e_v for v < #vertices
  std::map<std::vector<int>, int> index_of_nontrivial;

  int find(const std::vector<int>& seq, int src_vertex) const {
    if (seq.empty()) return src_vertex;
    auto it = index_of_nontrivial.find(seq);
    return it == index_of_nontrivial.end() ? -1 : it->second;
  }
};

PathTable enumerate_paths(const QuiverPresentation& pres, int max_len,
                          std::uint64_t budget) {
  PathTable t;
  const int nv = static_cast<int>(pres.vertices.size());
  for (int v = 0; v < nv; ++v) t.paths.push_back({v, v, {}});
  size_t frontier = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t end = t.paths.size();
    for (size_t i = frontier; i < end; ++i) {
      for (size_t a = 0; a < pres.arrows.size(); ++a) {
        if (pres.vertex_index(pres.arrows[a].src) != t.paths[i].tgt) continue;
        PathTable::P ext;
        ext.src = t.paths[i].src;
        ext.tgt = pres.vertex_index(pres.arrows[a].tgt);
        // the new arrow is applied after the existing path: prepend
        ext.arrows.push_back(static_cast<int>(a));
        ext.arrows.insert(ext.arrows.end(), t.paths[i].arrows.begin(),
                          t.paths[i].arrows.end());
        t.paths.push_back(std::move(ext));
        if (t.paths.size() > budget)
          throw AlgebraError("PathBudgetExceeded", "too many paths below the length bound");
      }
    }
    frontier = end;
  }
  for (size_t i = 0; i < t.paths.size(); ++i)
    if (!t.paths[i].arrows.empty())
      t.index_of_nontrivial[t.paths[i].arrows] = static_cast<int>(i);
  return t;
}

// row-reduced subspace with a fixed elimination order over path coordinates
struct Reducer {
  const Field& F;
  int n;
  std::vector<int> order;  // elimination order (long paths first)
  std::vector<std::vector<FElem>> rows;
  std::vector<int> pivot_of_row;

  Reducer(const Field& f, int ncols, std::vector<int> elim_order)
      : F(f), n(ncols), order(std::move(elim_order)) {}

  std::vector<FElem>& reduce(std::vector<FElem>& v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      FElem c = v[static_cast<size_t>(pivot_of_row[r])];
      if (c == 0) continue;
      for (int j = 0; j < n; ++j)
        v[static_cast<size_t>(j)] =
            F.sub(v[static_cast<size_t>(j)], F.mul(c, rows[r][static_cast<size_t>(j)]));
    }
    return v;
  }

  bool insert(std::vector<FElem> v) {
    reduce(v);
    int pivot = -1;
    for (int pos = 0; pos < n; ++pos) {
      int col = order[static_cast<size_t>(pos)];
      if (v[static_cast<size_t>(col)] != 0) {
        pivot = col;
        break;
      }
    }
    if (pivot < 0) return false;
    FElem inv = F.inv(v[static_cast<size_t>(pivot)]);
    for (auto& x : v) x = F.mul(x, inv);
    for (size_t r = 0; r < rows.size(); ++r) {
      FElem c = rows[r][static_cast<size_t>(pivot)];
      if (c == 0) continue;
      for (int j = 0; j < n; ++j)
        rows[r][static_cast<size_t>(j)] =
            F.sub(rows[r][static_cast<size_t>(j)], F.mul(c, v[static_cast<size_t>(j)]));
    }
    rows.push_back(std::move(v));
    pivot_of_row.push_back(pivot);
    return true;
  }

  bool is_pivot(int col) const {
    return std::find(pivot_of_row.begin(), pivot_of_row.end(), col) != pivot_of_row.end();
  }
};

}  // namespace

StructureAlgebra presented_algebra(const QuiverPresentation& pres,
                                   std::shared_ptr<const Field> field, int length_bound,
                                   std::uint64_t path_budget) {
  pres.validate();
  const Field& F = *field;
  const int L = length_bound;
  PathTable tab = enumerate_paths(pres, 2 * L, path_budget);
  const int np = static_cast<int>(tab.paths.size());

  std::vector<int> order(static_cast<size_t>(np));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& pa = tab.paths[static_cast<size_t>(a)];
    const auto& pb = tab.paths[static_cast<size_t>(b)];
    if (pa.arrows.size() != pb.arrows.size()) return pa.arrows.size() > pb.arrows.size();
    if (pa.arrows != pb.arrows) return pa.arrows > pb.arrows;
    return a > b;
  });
  Reducer red(F, np, order);

  for (auto& rel : pres.relations) {
    std::vector<std::pair<FElem, std::vector<int>>> terms;
    int rsrc = -1, rtgt = -1;
    for (auto& term : rel) {
      auto seq = pres.expand_path(term.path);
      rsrc = pres.vertex_index(pres.arrows[static_cast<size_t>(seq.back())].src);
      rtgt = pres.vertex_index(pres.arrows[static_cast<size_t>(seq.front())].tgt);
      terms.emplace_back(F.from_int(term.coeff), seq);
    }
    for (int u = 0; u < np; ++u) {
      const auto& pu = tab.paths[static_cast<size_t>(u)];
      if (pu.src != rtgt) continue;
      for (int v = 0; v < np; ++v) {
        const auto& pv = tab.paths[static_cast<size_t>(v)];
        if (pv.tgt != rsrc) continue;
        bool fits = true;
        std::vector<FElem> vec(static_cast<size_t>(np), 0);
        for (auto& [c, seq] : terms) {
          if (pu.arrows.size() + seq.size() + pv.arrows.size() >
              static_cast<size_t>(2 * L)) {
            fits = false;
            break;
          }
          std::vector<int> whole = pu.arrows;
          whole.insert(whole.end(), seq.begin(), seq.end());
          whole.insert(whole.end(), pv.arrows.begin(), pv.arrows.end());
          int idx = tab.find(whole, pv.src);
          if (idx < 0) {
            fits = false;
            break;
          }
          vec[static_cast<size_t>(idx)] = F.add(vec[static_cast<size_t>(idx)], c);
        }
        if (fits) red.insert(std::move(vec));
      }
    }
  }

  std::vector<int> basis_paths;
  for (int i = 0; i < np; ++i) {
    if (red.is_pivot(i)) continue;
    size_t len = tab.paths[static_cast<size_t>(i)].arrows.size();
    if (len >= static_cast<size_t>(L))
      throw AlgebraError("NotFiniteDimensionalWithinBound",
                         "a path class of length " + std::to_string(len) +
                             " survives at bound " + std::to_string(L));
    basis_paths.push_back(i);
  }
  const int d = static_cast<int>(basis_paths.size());
  std::vector<int> coord_of(static_cast<size_t>(np), -1);
  for (int i = 0; i < d; ++i)
    coord_of[static_cast<size_t>(basis_paths[static_cast<size_t>(i)])] = i;

  auto reduce_to_coords = [&](std::vector<FElem> vec) {
    red.reduce(vec);
    AlgElem out(static_cast<size_t>(d), 0);
    for (int i = 0; i < np; ++i) {
      if (vec[static_cast<size_t>(i)] == 0) continue;
      if (coord_of[static_cast<size_t>(i)] < 0)
        throw AlgebraError("Internal", "reduction left a pivot path");
      out[static_cast<size_t>(coord_of[static_cast<size_t>(i)])] =
          vec[static_cast<size_t>(i)];
    }
    return out;
  };

  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) {
    const auto& p = tab.paths[static_cast<size_t>(basis_paths[static_cast<size_t>(i)])];
    if (p.arrows.empty()) {
      labels.push_back("e_" + pres.vertices[static_cast<size_t>(p.src)]);
    } else {
      std::string s;
      for (size_t k = 0; k < p.arrows.size(); ++k) {
        s += pres.arrows[static_cast<size_t>(p.arrows[k])].id;
        if (k + 1 < p.arrows.size()) s += "*";
      }
      labels.push_back(s);
    }
  }

  std::vector<std::vector<std::pair<int, FElem>>> table(static_cast<size_t>(d) *
                                                        static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    const auto& pi = tab.paths[static_cast<size_t>(basis_paths[static_cast<size_t>(i)])];
    for (int j = 0; j < d; ++j) {
      const auto& pj = tab.paths[static_cast<size_t>(basis_paths[static_cast<size_t>(j)])];
      if (pj.tgt != pi.src) continue;
      std::vector<int> concat = pi.arrows;
      concat.insert(concat.end(), pj.arrows.begin(), pj.arrows.end());
      int idx = tab.find(concat, pj.src);
      if (idx < 0) throw AlgebraError("Internal", "product path left the window");
      std::vector<FElem> vec(static_cast<size_t>(np), 0);
      vec[static_cast<size_t>(idx)] = 1;
      AlgElem q = reduce_to_coords(std::move(vec));
      for (int k = 0; k < d; ++k)
        if (q[static_cast<size_t>(k)] != 0)
          table[static_cast<size_t>(i) * static_cast<size_t>(d) + static_cast<size_t>(j)]
              .emplace_back(k, q[static_cast<size_t>(k)]);
    }
  }
  AlgElem unit(static_cast<size_t>(d), 0);
  for (size_t v = 0; v < pres.vertices.size(); ++v) {
    int c = coord_of[v];
    if (c < 0) throw AlgebraError("Internal", "trivial path eliminated by the ideal");
    unit[static_cast<size_t>(c)] = 1;
  }
  auto alg =
      StructureAlgebra::make(field, std::move(labels), std::move(table), std::move(unit));
  std::map<std::string, AlgElem> units;
  for (size_t v = 0; v < pres.vertices.size(); ++v) {
    AlgElem u(static_cast<size_t>(d), 0);
    u[static_cast<size_t>(coord_of[v])] = 1;
    units[pres.vertices[v]] = u;
  }
  alg.set_object_units(std::move(units));
  return alg;
}

// ---------------------------------------------------------------------------
// verify_presentation

namespace {

std::vector<std::vector<FElem>> fiber_candidates(const Field& F,
                                                 const std::vector<AlgElem>& fiber) {
  std::vector<std::vector<FElem>> out;
  const int d = static_cast<int>(fiber.size());
  auto combine = [&](const std::vector<std::pair<int, FElem>>& terms) {
    AlgElem v(fiber.empty() ? 0 : fiber[0].size(), 0);
    for (auto& [i, c] : terms)
      for (size_t t = 0; t < v.size(); ++t)
        v[t] = F.add(v[t], F.mul(c, fiber[static_cast<size_t>(i)][t]));
    return v;
  };
  FElem one = F.one(), minus = F.neg(F.one());
  for (int i = 0; i < d; ++i) {
    out.push_back(combine({{i, one}}));
    if (minus != one) out.push_back(combine({{i, minus}}));
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (FElem ci : {one, minus}) {
        for (FElem cj : {one, minus}) {
          out.push_back(combine({{i, ci}, {j, cj}}));
          if (minus == one) break;
        }
        if (minus == one) break;
      }
  if (d >= 1 && d <= 3) {
    std::int64_t p = F.characteristic();
    std::int64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (std::int64_t code = 1; code < total; ++code) {
      std::int64_t t = code;
      std::vector<std::pair<int, FElem>> terms;
      for (int i = 0; i < d; ++i) {
        auto c = static_cast<FElem>(t % p);
        t /= p;
        if (c != 0) terms.emplace_back(i, c);
      }
      out.push_back(combine(terms));
    }
  }
  std::vector<std::vector<FElem>> uniq;
  for (auto& v : out)
    if (std::find(uniq.begin(), uniq.end(), v) == uniq.end()) uniq.push_back(v);
  return uniq;
}

}  // namespace

PresentationWitness verify_presentation(const IdempotentDecomposition& dec,
                                        const QuiverPresentation& pres,
                                        std::uint64_t budget) {
  pres.validate();
  PresentationWitness out;
  const StructureAlgebra& A = dec.algebra;
  const Field& F = A.field();

  if (static_cast<int>(dec.idempotents.size()) != dec.class_count) {
    out.reason = "algebra is not basic";
    return out;
  }
  const int nv = static_cast<int>(pres.vertices.size());
  if (nv != dec.class_count) {
    out.reason = "vertex count differs from simple count";
    return out;
  }

  StructureAlgebra B;
  try {
    B = presented_algebra(pres, A.field_ptr(), A.dim() + 2);
  } catch (const AlgebraError& e) {
    out.reason = std::string("presented algebra failed: ") + e.what();
    return out;
  }
  out.presented_dim = B.dim();
  if (B.dim() != A.dim()) {
    out.reason = "dimension mismatch: presented " + std::to_string(B.dim()) +
                 " vs algebra " + std::to_string(A.dim());
    return out;
  }

  auto rad = radical(A);
  auto rad2 = subspace_product(A, rad, rad);

  auto fiber_basis = [&](int ci, int cj) {
    std::vector<AlgElem> fiber = rad2;
    std::vector<AlgElem> reps;
    const AlgElem& ei = dec.idempotents[static_cast<size_t>(ci)];
    const AlgElem& ej = dec.idempotents[static_cast<size_t>(cj)];
    int rank = span_rank(F, fiber);
    for (auto& r : rad) {
      AlgElem v = A.mul(ej, A.mul(r, ei));
      auto extended = fiber;
      extended.push_back(v);
      int next = span_rank(F, extended);
      if (next > rank) {
        fiber.push_back(v);
        reps.push_back(v);
        rank = next;
      }
    }
    return reps;
  };

  std::vector<int> perm(static_cast<size_t>(nv));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t spent = 0;
  do {
    std::vector<std::vector<int>> arrow_need(static_cast<size_t>(nv),
                                             std::vector<int>(static_cast<size_t>(nv), 0));
    for (auto& a : pres.arrows)
      ++arrow_need[static_cast<size_t>(pres.vertex_index(a.src))]
                  [static_cast<size_t>(pres.vertex_index(a.tgt))];
    bool profile_ok = true;
    std::vector<std::vector<std::vector<AlgElem>>> fibers(
        static_cast<size_t>(nv),
        std::vector<std::vector<AlgElem>>(static_cast<size_t>(nv)));
    for (int i = 0; i < nv && profile_ok; ++i)
      for (int j = 0; j < nv && profile_ok; ++j) {
        fibers[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            fiber_basis(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
        if (static_cast<int>(
                fibers[static_cast<size_t>(i)][static_cast<size_t>(j)].size()) !=
            arrow_need[static_cast<size_t>(i)][static_cast<size_t>(j)])
          profile_ok = false;
      }
    if (!profile_ok) continue;

    std::vector<std::vector<std::vector<FElem>>> cands;
    bool feasible = true;
    for (auto& a : pres.arrows) {
      int i = pres.vertex_index(a.src), j = pres.vertex_index(a.tgt);
      auto cand =
          fiber_candidates(F, fibers[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      if (cand.empty()) {
        feasible = false;
        break;
      }
      cands.push_back(std::move(cand));
    }
    if (!feasible) continue;

    const size_t na = pres.arrows.size();
    std::vector<size_t> pick(na, 0);
    while (true) {
      if (++spent > budget) {
        out.reason = "SearchBudgetExceeded";
        return out;
      }
      std::map<std::string, AlgElem> images;
      for (size_t a = 0; a < na; ++a) images[pres.arrows[a].id] = cands[a][pick[a]];

      std::vector<AlgElem> phi(static_cast<size_t>(B.dim()));
      for (int b = 0; b < B.dim(); ++b) {
        const std::string& label = B.basis()[static_cast<size_t>(b)];
        if (label.rfind("e_", 0) == 0) {
          int v = pres.vertex_index(label.substr(2));
          phi[static_cast<size_t>(b)] =
              dec.idempotents[static_cast<size_t>(perm[static_cast<size_t>(v)])];
          continue;
        }
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : label) {
          if (ch == '*') {
            parts.push_back(cur);
            cur.clear();
          } else {
            cur += ch;
          }
        }
        parts.push_back(cur);
        AlgElem acc;
        bool first = true;
        for (auto& part : parts) {
          const AlgElem& img = images.at(part);
          if (first) {
            acc = img;
            first = false;
          } else {
            acc = A.mul(acc, img);
          }
        }
        phi[static_cast<size_t>(b)] = std::move(acc);
      }
      bool ok = true;
      AlgElem unit_img = A.zero();
      for (int b = 0; b < B.dim(); ++b) {
        FElem c = B.unit()[static_cast<size_t>(b)];
        if (c != 0) unit_img = A.add(unit_img, A.scale(phi[static_cast<size_t>(b)], c));
      }
      ok = (unit_img == A.unit());
      for (int i = 0; i < B.dim() && ok; ++i)
        for (int j = 0; j < B.dim() && ok; ++j) {
          AlgElem lhs = A.mul(phi[static_cast<size_t>(i)], phi[static_cast<size_t>(j)]);
          AlgElem rhs = A.zero();
          for (auto& [k, c] : B.basis_product(i, j))
            rhs = A.add(rhs, A.scale(phi[static_cast<size_t>(k)], c));
          if (lhs != rhs) ok = false;
        }
      if (ok && span_rank(F, phi) != A.dim()) ok = false;
      if (ok) {
        out.verified = true;
        for (int v = 0; v < nv; ++v)
          out.vertex_to_class.push_back(perm[static_cast<size_t>(v)]);
        out.arrow_images = images;
        return out;
      }
      size_t level = 0;
      for (; level < na; ++level) {
        if (++pick[level] < cands[level].size()) break;
        pick[level] = 0;
      }
      if (level == na || na == 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (out.reason.empty()) out.reason = "no witness assignment found";
  return out;
}

PresentationWitness verify_presentation(const StructureAlgebra& a,
                                        const QuiverPresentation& pres,
                                        std::uint64_t budget) {
  return verify_presentation(primitive_idempotents(a), pres, budget);
}

// ---------------------------------------------------------------------------
// String algebras and bands

bool is_monomial(const QuiverPresentation& pres) {
  for (auto& rel : pres.relations)
    if (rel.size() != 1) return false;
  return true;
}

namespace {

std::vector<std::vector<int>> zero_relation_paths(const QuiverPresentation& pres) {
  std::vector<std::vector<int>> out;
  for (auto& rel : pres.relations)
    if (rel.size() == 1) out.push_back(pres.expand_path(rel[0].path));
  return out;
}

bool contains_relation(const std::vector<int>& word,
                       const std::vector<std::vector<int>>& rels) {
  for (auto& r : rels) {
    if (r.size() > word.size()) continue;
    for (size_t s = 0; s + r.size() <= word.size(); ++s) {
      bool hit = true;
      for (size_t i = 0; i < r.size(); ++i)
        if (word[s + i] != r[i]) {
          hit = false;
          break;
        }
      if (hit) return true;
    }
  }
  return false;
}

}  // namespace

bool is_string_algebra(const QuiverPresentation& pres) {
  pres.validate();
  if (!is_monomial(pres)) return false;
  auto rels = zero_relation_paths(pres);
  const int na = static_cast<int>(pres.arrows.size());
  for (auto& v : pres.vertices) {
    int in = 0, outd = 0;
    for (auto& a : pres.arrows) {
      if (a.src == v) ++outd;
      if (a.tgt == v) ++in;
    }
    if (in > 2 || outd > 2) return false;
  }
  for (int b = 0; b < na; ++b) {
    int forward = 0, backward = 0;
    for (int a = 0; a < na; ++a) {
      if (pres.arrows[static_cast<size_t>(a)].src ==
              pres.arrows[static_cast<size_t>(b)].tgt &&
          !contains_relation({a, b}, rels))
        ++forward;  // a ∘ b survives
      if (pres.arrows[static_cast<size_t>(b)].src ==
              pres.arrows[static_cast<size_t>(a)].tgt &&
          !contains_relation({b, a}, rels))
        ++backward;  // b ∘ a survives
    }
    if (forward > 1 || backward > 1) return false;
  }
  return true;
}

namespace {

// letters: 0..na-1 direct, na..2na-1 inverse
struct LetterWorld {
  const QuiverPresentation& pres;
  std::vector<std::vector<int>> rels;
  int na;

  explicit LetterWorld(const QuiverPresentation& p)
      : pres(p), rels(zero_relation_paths(p)), na(static_cast<int>(p.arrows.size())) {}

  bool is_inverse(int l) const { return l >= na; }
  int arrow(int l) const { return l % na; }
  int src(int l) const {
    const auto& a = pres.arrows[static_cast<size_t>(arrow(l))];
    return pres.vertex_index(is_inverse(l) ? a.tgt : a.src);
  }
  int tgt(int l) const {
    const auto& a = pres.arrows[static_cast<size_t>(arrow(l))];
    return pres.vertex_index(is_inverse(l) ? a.src : a.tgt);
  }

  // can l2 follow l1 (l2 applied after l1)?
  bool pair_ok(int l1, int l2) const {
    if (src(l2) != tgt(l1)) return false;
    if (arrow(l1) == arrow(l2) && is_inverse(l1) != is_inverse(l2)) return false;
    if (!is_inverse(l1) && !is_inverse(l2)) {
      if (contains_relation({arrow(l2), arrow(l1)}, rels)) return false;
    } else if (is_inverse(l1) && is_inverse(l2)) {
      // a^{-1} then b^{-1} walks the direct path "a then b" backwards
      if (contains_relation({arrow(l1), arrow(l2)}, rels)) return false;
    }
    return true;
  }

  // word in application order; pairs plus every same-orientation run window
  bool word_ok(const std::vector<int>& w) const {
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (!pair_ok(w[i], w[i + 1])) return false;
    size_t i = 0;
    while (i < w.size()) {
      size_t j = i;
      while (j + 1 < w.size() && is_inverse(w[j + 1]) == is_inverse(w[i])) ++j;
      std::vector<int> path;
      if (!is_inverse(w[i])) {
        // direct run applied i..j: composition order is w[j], ..., w[i]
        for (size_t k = j + 1; k-- > i;) path.push_back(arrow(w[k]));
      } else {
        // inverse run walks the direct path w[i], ..., w[j] backwards
        for (size_t k = i; k <= j; ++k) path.push_back(arrow(w[k]));
      }
      if (contains_relation(path, rels)) return false;
      i = j + 1;
    }
    return true;
  }
};

std::string letter_display(const QuiverPresentation& pres, const std::vector<int>& w) {
  const int na = static_cast<int>(pres.arrows.size());
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    s += pres.arrows[static_cast<size_t>(w[i] % na)].id;
    if (w[i] >= na) s += "-";
    if (i + 1 < w.size()) s += " ";
  }
  return s;
}

bool is_proper_power(const std::vector<int>& w) {
  const size_t n = w.size();
  for (size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (size_t i = 0; i < n && periodic; ++i) periodic = (w[i] == w[i % d]);
    if (periodic) return true;
  }
  return false;
}

}  // namespace

int default_band_bound(const QuiverPresentation& pres) {
  size_t maxrel = 2;
  for (auto& rel : pres.relations)
    if (rel.size() == 1) maxrel = std::max(maxrel, pres.expand_path(rel[0].path).size());
  return 2 * static_cast<int>(pres.arrows.size()) * static_cast<int>(maxrel);
}

bool check_band_witness(const QuiverPresentation& pres, const BandWitness& w) {
  LetterWorld world(pres);
  if (w.letters.size() < 2) return false;
  std::vector<int> norm;
  for (int l : w.letters) norm.push_back(l >= 0 ? l : world.na + (-l - 1));
  for (int l : norm)
    if (world.arrow(l) < 0 || world.arrow(l) >= world.na) return false;
  if (world.src(norm.front()) != world.tgt(norm.back())) return false;
  bool has_direct = false, has_inverse = false;
  for (int l : norm) (world.is_inverse(l) ? has_inverse : has_direct) = true;
  if (!has_direct || !has_inverse) return false;
  if (is_proper_power(norm)) return false;
  size_t maxrel = 2;
  for (auto& rel : pres.relations)
    if (rel.size() == 1) maxrel = std::max(maxrel, pres.expand_path(rel[0].path).size());
  size_t m = 2 + maxrel / norm.size() + 1;
  std::vector<int> power;
  for (size_t i = 0; i < m; ++i) power.insert(power.end(), norm.begin(), norm.end());
  if (!world.word_ok(power)) return false;
  return world.pair_ok(power.back(), power.front());
}

std::optional<BandWitness> find_band(const QuiverPresentation& pres, int max_length) {
  pres.validate();
  if (!is_monomial(pres)) return std::nullopt;
  LetterWorld world(pres);
  const int nl = 2 * world.na;

  std::vector<int> word;
  std::optional<BandWitness> found;

  std::function<bool(int)> dfs = [&](int target_len) -> bool {
    if (static_cast<int>(word.size()) == target_len) {
      if (!world.pair_ok(word.back(), word.front())) return false;
      bool has_direct = false, has_inverse = false;
      for (int l : word) (world.is_inverse(l) ? has_inverse : has_direct) = true;
      if (!has_direct || !has_inverse) return false;
      if (is_proper_power(word)) return false;
      BandWitness w;
      for (int l : word)
        w.letters.push_back(world.is_inverse(l) ? -(world.arrow(l) + 1) : world.arrow(l));
      w.display = letter_display(pres, word);
      if (check_band_witness(pres, w)) {
        found = std::move(w);
        return true;
      }
      return false;
    }
    for (int l = 0; l < nl; ++l) {
      if (!word.empty() && !world.pair_ok(word.back(), l)) continue;
      word.push_back(l);
      if (world.word_ok(word) && dfs(target_len)) return true;
      word.pop_back();
    }
    return false;
  };

  for (int len = 2; len <= max_length; ++len) {
    word.clear();
    if (dfs(len)) return found;
  }
  return std::nullopt;
}

bool certify_band_free(const QuiverPresentation& pres) {
  pres.validate();
  if (!is_monomial(pres)) return false;
  LetterWorld world(pres);
  const int nl = 2 * world.na;
  std::vector<std::vector<int>> adj(static_cast<size_t>(nl));
  for (int a = 0; a < nl; ++a)
    for (int b = 0; b < nl; ++b)
      if (world.pair_ok(a, b)) adj[static_cast<size_t>(a)].push_back(b);

  std::vector<int> index(static_cast<size_t>(nl), -1), low(static_cast<size_t>(nl), 0),
      comp(static_cast<size_t>(nl), -1);
  std::vector<bool> onstack(static_cast<size_t>(nl), false);
  std::vector<int> stack;
  std::vector<bool> selfloop(static_cast<size_t>(nl), false);
  int counter = 0, ncomp = 0;
  std::function<void(int)> strongconnect = [&](int v) {
    index[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = counter++;
    stack.push_back(v);
    onstack[static_cast<size_t>(v)] = true;
    for (int w : adj[static_cast<size_t>(v)]) {
      if (w == v) selfloop[static_cast<size_t>(v)] = true;
      if (index[static_cast<size_t>(w)] < 0) {
        strongconnect(w);
        low[static_cast<size_t>(v)] =
            std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
      } else if (onstack[static_cast<size_t>(w)]) {
        low[static_cast<size_t>(v)] =
            std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
      }
    }
    if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        onstack[static_cast<size_t>(w)] = false;
        comp[static_cast<size_t>(w)] = ncomp;
        if (w == v) break;
      }
      ++ncomp;
    }
  };
  for (int v = 0; v < nl; ++v)
    if (index[static_cast<size_t>(v)] < 0) strongconnect(v);

  for (int c = 0; c < ncomp; ++c) {
    bool has_direct = false, has_inverse = false;
    for (int l = 0; l < nl; ++l)
      if (comp[static_cast<size_t>(l)] == c)
        (world.is_inverse(l) ? has_inverse : has_direct) = true;
    if (has_direct && has_inverse) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Graph classification

Quiver quiver_of(const ExtQuiver& q) {
  Quiver out;
  out.vertices = q.vertices;
  int counter = 0;
  for (size_t i = 0; i < q.arrows.size(); ++i)
    for (size_t j = 0; j < q.arrows.size(); ++j)
      for (int m = 0; m < q.arrows[i][j]; ++m)
        out.arrows.push_back(
            {"a" + std::to_string(counter++), q.vertices[i], q.vertices[j]});
  return out;
}

namespace {

GraphComponent classify_component(const std::vector<int>& verts,
                                  const std::vector<std::pair<int, int>>& edges) {
  GraphComponent out;
  out.vertices = verts;
  const int nv = static_cast<int>(verts.size());
  const int ne = static_cast<int>(edges.size());
  std::map<int, int> pos;
  for (int i = 0; i < nv; ++i) pos[verts[static_cast<size_t>(i)]] = i;
  std::vector<int> deg(static_cast<size_t>(nv), 0);
  int loops = 0;
  std::map<std::pair<int, int>, int> mult;
  for (auto& [a, b] : edges) {
    if (a == b) {
      deg[static_cast<size_t>(pos[a])] += 2;
      ++loops;
    } else {
      ++deg[static_cast<size_t>(pos[a])];
      ++deg[static_cast<size_t>(pos[b])];
      ++mult[{std::min(pos[a], pos[b]), std::max(pos[a], pos[b])}];
    }
  }
  bool multi = false;
  for (auto& [e, m] : mult) {
    (void)e;
    if (m > 1) multi = true;
  }

  auto other = [&]() {
    out.tag = GraphTag::Other;
    out.name = "other";
    return out;
  };

  if (ne == nv) {  // one cycle: A~ when every degree is exactly 2
    for (int d : deg)
      if (d != 2) return other();
    out.tag = GraphTag::Euclidean;
    out.name = "A~" + std::to_string(nv - 1);
    return out;
  }
  if (ne != nv - 1 || loops > 0 || multi) return other();

  std::vector<std::vector<int>> adj(static_cast<size_t>(nv));
  for (auto& [a, b] : edges) {
    adj[static_cast<size_t>(pos[a])].push_back(pos[b]);
    adj[static_cast<size_t>(pos[b])].push_back(pos[a]);
  }
  std::vector<int> centers3, centers4plus;
  for (int i = 0; i < nv; ++i) {
    if (deg[static_cast<size_t>(i)] == 3) centers3.push_back(i);
    if (deg[static_cast<size_t>(i)] >= 4) centers4plus.push_back(i);
  }
  if (centers4plus.size() == 1 && centers3.empty() &&
      deg[static_cast<size_t>(centers4plus[0])] == 4 && nv == 5) {
    out.tag = GraphTag::Euclidean;
    out.name = "D~4";
    return out;
  }
  if (!centers4plus.empty()) return other();

  if (centers3.empty()) {
    out.tag = GraphTag::DynkinADE;
    out.name = "A" + std::to_string(nv);
    return out;
  }
  if (centers3.size() == 1) {
    int c = centers3[0];
    std::vector<int> arms;
    for (int nb : adj[static_cast<size_t>(c)]) {
      int len = 1, prev = c, cur = nb;
      while (true) {
        int next = -1;
        for (int t : adj[static_cast<size_t>(cur)])
          if (t != prev) next = t;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) return other();
    int a = arms[0], b = arms[1], cc = arms[2];
    if (a == 1 && b == 1) {
      out.tag = GraphTag::DynkinADE;
      out.name = "D" + std::to_string(nv);
      return out;
    }
    if (a == 1 && b == 2 && cc == 2) { out.tag = GraphTag::DynkinADE; out.name = "E6"; return out; }
    if (a == 1 && b == 2 && cc == 3) { out.tag = GraphTag::DynkinADE; out.name = "E7"; return out; }
    if (a == 1 && b == 2 && cc == 4) { out.tag = GraphTag::DynkinADE; out.name = "E8"; return out; }
    if (a == 2 && b == 2 && cc == 2) { out.tag = GraphTag::Euclidean; out.name = "E~6"; return out; }
    if (a == 1 && b == 3 && cc == 3) { out.tag = GraphTag::Euclidean; out.name = "E~7"; return out; }
    if (a == 1 && b == 2 && cc == 5) { out.tag = GraphTag::Euclidean; out.name = "E~8"; return out; }
    return other();
  }
  if (centers3.size() == 2) {
    for (int c : centers3) {
      int leaf_arms = 0;
      for (int nb : adj[static_cast<size_t>(c)])
        if (deg[static_cast<size_t>(nb)] == 1) ++leaf_arms;
      if (leaf_arms != 2) return other();
    }
    out.tag = GraphTag::Euclidean;
    out.name = "D~" + std::to_string(nv - 1);
    return out;
  }
  return other();
}

}  // namespace

GraphClass underlying_graph_class(const Quiver& q) {
  const int nv = static_cast<int>(q.vertices.size());
  std::map<std::string, int> pos;
  for (int i = 0; i < nv; ++i) pos[q.vertices[static_cast<size_t>(i)]] = i;
  std::vector<int> comp(static_cast<size_t>(nv), -1);
  std::vector<std::vector<int>> adj(static_cast<size_t>(nv));
  for (auto& a : q.arrows) {
    adj[static_cast<size_t>(pos[a.src])].push_back(pos[a.tgt]);
    adj[static_cast<size_t>(pos[a.tgt])].push_back(pos[a.src]);
  }
  int nc = 0;
  for (int s = 0; s < nv; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int> stack = {s};
    comp[static_cast<size_t>(s)] = nc;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(v)])
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  GraphClass out;
  out.tag = GraphTag::DynkinADE;
  for (int c = 0; c < nc; ++c) {
    std::vector<int> verts;
    for (int v = 0; v < nv; ++v)
      if (comp[static_cast<size_t>(v)] == c) verts.push_back(v);
    std::vector<std::pair<int, int>> edges;
    for (auto& a : q.arrows)
      if (comp[static_cast<size_t>(pos[a.src])] == c)
        edges.emplace_back(pos[a.src], pos[a.tgt]);
    auto gc = classify_component(verts, edges);
    if (gc.tag == GraphTag::Other) out.tag = GraphTag::Other;
    if (gc.tag == GraphTag::Euclidean && out.tag == GraphTag::DynkinADE)
      out.tag = GraphTag::Euclidean;
    out.components.push_back(std::move(gc));
  }
  return out;
}

}  // namespace eirep
