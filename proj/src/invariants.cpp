#include "altk/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "altk/errors.hpp"
#include "altk/linalg.hpp"
#include "altk/seifert.hpp"

namespace altk {

namespace {

LaurentPoly one_minus_t() {
  return LaurentPoly(0, {Int(1), Int(-1)});
}

}  // namespace

LaurentPoly alexander_pd_poly(const LinkDiagram& d) {
  if (!d.is_connected())
    throw precondition_error("split diagram: Alexander polynomial is zero");
  int c = d.crossing_count();

  // Overpass generators: arcs merged across crossings they pass over.
  std::vector<int> parent(d.arc_count() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 1; a <= d.arc_count(); ++a) {
    if (d.enter_is_over(a)) {
      int b = d.successor(a);
      parent[find(a)] = find(b);
    }
  }
  std::map<int, int> gen_id;
  for (int a = 1; a <= d.arc_count(); ++a) {
    int r = find(a);
    if (!gen_id.count(r)) gen_id.emplace(r, static_cast<int>(gen_id.size()));
  }
  int m = static_cast<int>(gen_id.size());
  if (m != c)
    throw precondition_error(
        "diagram has a closed overpass; Wirtinger matrix is not square");

  PolyMatrix mat(c, std::vector<LaurentPoly>(c));
  LaurentPoly t = LaurentPoly::term(Int(1), 1);
  for (int k = 0; k < c; ++k) {
    const Crossing& x = d.crossings()[k];
    int over = gen_id[find(x.over_in())];
    int uin = gen_id[find(x.under_in())];
    int uout = gen_id[find(x.under_out())];
    mat[k][over] += one_minus_t();
    if (x.sign > 0) {
      mat[k][uin] += t;
      mat[k][uout] -= LaurentPoly::one();
    } else {
      mat[k][uin] -= LaurentPoly::one();
      mat[k][uout] += t;
    }
  }
  // Delete the last row and column.
  PolyMatrix minor(c - 1, std::vector<LaurentPoly>(c - 1));
  for (int i = 0; i + 1 < c; ++i)
    for (int j = 0; j + 1 < c; ++j) minor[i][j] = mat[i][j];
  LaurentPoly det = c == 1 ? LaurentPoly::one() : det_poly_matrix(minor);
  if (det.is_zero())
    throw validation_error(
        "vanishing Alexander determinant on a non-split diagram");
  return det.unit_normal();
}

CoeffSeq alexander_pd(const LinkDiagram& d) {
  return normalize_alexander(alexander_pd_poly(d));
}

LaurentPoly alexander_burau_poly(const BraidWord& b) {
  int n = b.strands;
  std::vector<bool> used(n, false);
  for (int w : b.letters) used[w > 0 ? w : -w] = true;
  for (int i = 1; i < n; ++i)
    if (!used[i])
      throw precondition_error("braid closure is split: generator " +
                               std::to_string(i) + " unused");

  int m = n - 1;
  auto identity = [&] {
    PolyMatrix r(m, std::vector<LaurentPoly>(m));
    for (int i = 0; i < m; ++i) r[i][i] = LaurentPoly::one();
    return r;
  };
  auto gen_matrix = [&](int letter) {
    PolyMatrix r = identity();
    int i = letter > 0 ? letter : -letter;  // 1-based generator
    int col = i - 1;                        // 0-based column
    if (letter > 0) {
      r[col][col] = LaurentPoly::term(Int(-1), 1);
      if (col - 1 >= 0) r[col - 1][col] = LaurentPoly::term(Int(1), 1);
      if (col + 1 < m) r[col + 1][col] = LaurentPoly::one();
    } else {
      r[col][col] = LaurentPoly::term(Int(-1), -1);
      if (col - 1 >= 0) r[col - 1][col] = LaurentPoly::one();
      if (col + 1 < m) r[col + 1][col] = LaurentPoly::term(Int(1), -1);
    }
    return r;
  };
  auto matmul = [&](const PolyMatrix& a, const PolyMatrix& bm) {
    PolyMatrix r(m, std::vector<LaurentPoly>(m));
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) {
        if (a[i][k].is_zero()) continue;
        for (int j = 0; j < m; ++j) {
          if (bm[k][j].is_zero()) continue;
          r[i][j] += a[i][k] * bm[k][j];
        }
      }
    return r;
  };

  PolyMatrix rho = identity();
  for (int w : b.letters) rho = matmul(rho, gen_matrix(w));
  for (int i = 0; i < m; ++i) rho[i][i] -= LaurentPoly::one();
  LaurentPoly det = det_poly_matrix(rho);
  if (det.is_zero())
    throw validation_error("Burau determinant vanished on non-split closure");

  std::vector<Int> ones(static_cast<std::size_t>(n), Int(1));
  LaurentPoly cyc(0, std::move(ones));  // 1 + t + ... + t^{n-1}
  return det.unit_normal().exact_div(cyc).unit_normal();
}

CoeffSeq alexander_burau(const BraidWord& b) {
  return normalize_alexander(alexander_burau_poly(b));
}

// ---------------------------------------------------------------------------
// Conway polynomial by skein recursion.

namespace {

struct SkeinState {
  std::vector<std::array<int, 4>> tuples;
  std::vector<int> signs;
  int loops = 0;
};

// Relabel raw arc ids to the canonical consecutive form; returns component
// blocks implicitly via the diagram rules. Tuples keep their order.
SkeinState relabel(const SkeinState& s) {
  if (s.tuples.empty()) return s;
  std::map<int, int> succ;
  for (std::size_t k = 0; k < s.tuples.size(); ++k) {
    const auto& t = s.tuples[k];
    int over_in = s.signs[k] > 0 ? t[1] : t[3];
    int over_out = s.signs[k] > 0 ? t[3] : t[1];
    succ[t[0]] = t[2];
    succ[over_in] = over_out;
  }
  std::map<int, int> relab;
  int next = 1;
  for (const auto& [arc, to] : succ) {
    if (relab.count(arc)) continue;
    int cur = arc;
    do {
      relab[cur] = next++;
      cur = succ.at(cur);
    } while (cur != arc);
  }
  SkeinState r = s;
  for (auto& t : r.tuples)
    for (int& a : t) a = relab.at(a);
  return r;
}

// R1 kinks do not change the Conway polynomial; strip them.
void strip_kinks(SkeinState& s) {
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t k = 0; k < s.tuples.size(); ++k) {
      const auto& t = s.tuples[k];
      int loop_arc = -1;
      for (int i = 0; i < 4 && loop_arc < 0; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (t[i] == t[j]) {
            loop_arc = t[i];
            break;
          }
      if (loop_arc < 0) continue;
      // The two remaining slots hold the incoming and outgoing arc.
      std::vector<int> rest;
      for (int i = 0; i < 4; ++i)
        if (t[i] != loop_arc) rest.push_back(t[i]);
      s.tuples.erase(s.tuples.begin() + static_cast<long>(k));
      s.signs.erase(s.signs.begin() + static_cast<long>(k));
      if (rest.empty()) {
        // One-crossing unknot component.
        ++s.loops;
      } else {
        int u = rest[0], v = rest[1];
        if (u == v) {
          ++s.loops;
        } else {
          for (auto& t2 : s.tuples)
            for (int& a : t2)
              if (a == v) a = u;
        }
      }
      again = true;
      break;
    }
  }
}

bool skein_connected(const SkeinState& s) {
  if (s.tuples.empty()) return true;
  std::map<int, int> arc_first;
  std::vector<int> parent(s.tuples.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < s.tuples.size(); ++k)
    for (int a : s.tuples[k]) {
      auto it = arc_first.find(a);
      if (it == arc_first.end())
        arc_first.emplace(a, static_cast<int>(k));
      else
        parent[find(it->second)] = find(static_cast<int>(k));
    }
  int root = find(0);
  for (std::size_t k = 1; k < s.tuples.size(); ++k)
    if (find(static_cast<int>(k)) != root) return false;
  return true;
}

std::string skein_key(const SkeinState& s) {
  std::ostringstream os;
  os << s.loops << "|";
  for (std::size_t k = 0; k < s.tuples.size(); ++k) {
    const auto& t = s.tuples[k];
    os << (s.signs[k] > 0 ? "+" : "-") << t[0] << "," << t[1] << "," << t[2]
       << "," << t[3] << ";";
  }
  return os.str();
}

struct SkeinContext {
  std::map<std::string, LaurentPoly> memo;
  long nodes = 0;
};

LaurentPoly conway_rec(SkeinState s, SkeinContext& ctx) {
  if (++ctx.nodes > (1L << 22))
    throw precondition_error("skein recursion budget exceeded");
  strip_kinks(s);
  if (s.tuples.empty())
    return s.loops == 1 ? LaurentPoly::one() : LaurentPoly::zero();
  if (s.loops > 0) return LaurentPoly::zero();  // split diagram
  if (!skein_connected(s)) return LaurentPoly::zero();

  s = relabel(s);
  std::string key = skein_key(s);
  auto it = ctx.memo.find(key);
  if (it != ctx.memo.end()) return it->second;

  // Walk arcs in label order; components are label blocks, so this walks each
  // component in turn. First passage at each crossing should be over for a
  // descending diagram.
  int n_arcs = 2 * static_cast<int>(s.tuples.size());
  // enter slot per arc
  std::vector<std::pair<int, int>> enter(n_arcs + 1, {-1, -1});
  for (std::size_t k = 0; k < s.tuples.size(); ++k) {
    const auto& t = s.tuples[k];
    enter[t[0]] = {static_cast<int>(k), 0};
    int over_in = s.signs[k] > 0 ? t[1] : t[3];
    int over_slot = s.signs[k] > 0 ? 1 : 3;
    enter[over_in] = {static_cast<int>(k), over_slot};
  }
  std::vector<bool> visited(s.tuples.size(), false);
  int bad = -1;
  for (int a = 1; a <= n_arcs && bad < 0; ++a) {
    auto [k, slot] = enter[a];
    if (k < 0) throw validation_error("skein walk hit an unlabeled arc");
    if (visited[k]) continue;
    visited[k] = true;
    if (slot == 0) bad = k;  // first passage goes under
  }
  if (bad < 0) {
    // Descending: split unlink with component_count circles.
    int comps = 0;
    {
      std::map<int, int> succ;
      for (std::size_t k = 0; k < s.tuples.size(); ++k) {
        const auto& t = s.tuples[k];
        succ[t[0]] = t[2];
        int oi = s.signs[k] > 0 ? t[1] : t[3];
        int oo = s.signs[k] > 0 ? t[3] : t[1];
        succ[oi] = oo;
      }
      std::map<int, bool> seen;
      for (const auto& [arc, to] : succ) {
        if (seen[arc]) continue;
        ++comps;
        int cur = arc;
        while (!seen[cur]) {
          seen[cur] = true;
          cur = succ.at(cur);
        }
      }
    }
    LaurentPoly r = comps == 1 ? LaurentPoly::one() : LaurentPoly::zero();
    ctx.memo.emplace(std::move(key), r);
    return r;
  }

  // Switch the bad crossing: rotate the PD tuple so it starts at the new
  // under-in.
  SkeinState switched = s;
  {
    const auto& t = s.tuples[bad];
    if (s.signs[bad] > 0) {
      switched.tuples[bad] = {t[1], t[2], t[3], t[0]};
      switched.signs[bad] = -1;
    } else {
      switched.tuples[bad] = {t[3], t[0], t[1], t[2]};
      switched.signs[bad] = 1;
    }
  }
  // Oriented smoothing of the bad crossing.
  SkeinState smoothed;
  smoothed.loops = s.loops;
  {
    const auto& t = s.tuples[bad];
    std::array<std::pair<int, int>, 2> merges =
        s.signs[bad] > 0
            ? std::array<std::pair<int, int>, 2>{{{t[0], t[3]}, {t[1], t[2]}}}
            : std::array<std::pair<int, int>, 2>{{{t[0], t[1]}, {t[3], t[2]}}};
    std::map<int, int> rep;
    auto find = [&](int x) {
      while (rep.count(x)) x = rep.at(x);
      return x;
    };
    for (auto [a, b2] : merges) {
      int ra = find(a), rb = find(b2);
      if (ra != rb) rep.emplace(rb, ra);
    }
    for (std::size_t k = 0; k < s.tuples.size(); ++k) {
      if (static_cast<int>(k) == bad) continue;
      std::array<int, 4> t2 = s.tuples[k];
      for (int& a : t2) a = find(a);
      smoothed.tuples.push_back(t2);
      smoothed.signs.push_back(s.signs[k]);
    }
    // A merged strand that meets no remaining crossing is a free loop.
    std::vector<int> reps;
    for (int a : t) {
      int r = find(a);
      if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
    }
    for (int r : reps) {
      bool appears = false;
      for (const auto& t2 : smoothed.tuples)
        for (int a : t2)
          if (a == r) appears = true;
      if (!appears) ++smoothed.loops;
    }
  }

  LaurentPoly z = LaurentPoly::term(Int(1), 1);
  LaurentPoly nabla_switched = conway_rec(switched, ctx);
  LaurentPoly nabla_smoothed = conway_rec(smoothed, ctx);
  LaurentPoly r = s.signs[bad] > 0 ? nabla_switched + z * nabla_smoothed
                                   : nabla_switched - z * nabla_smoothed;
  ctx.memo.emplace(std::move(key), r);
  return r;
}

}  // namespace

LaurentPoly conway_skein(const LinkDiagram& d) {
  if (d.crossing_count() > 12)
    throw precondition_error("skein recursion limited to 12 crossings");
  SkeinState s;
  for (const Crossing& x : d.crossings()) {
    s.tuples.push_back(x.arcs);
    s.signs.push_back(x.sign);
  }
  SkeinContext ctx;
  return conway_rec(std::move(s), ctx);
}

LaurentPoly conway_to_alexander(const LaurentPoly& nabla) {
  if (nabla.is_zero()) return nabla;
  // Split by parity; the Conway polynomial of a link is pure even or odd.
  bool has_even = false, has_odd = false;
  for (long e = nabla.lo(); e <= nabla.hi(); ++e) {
    if (nabla.coeff(e) == 0) continue;
    (e % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_even && has_odd)
    throw validation_error("Conway polynomial has mixed parity");
  // z^2 = t - 2 + 1/t
  LaurentPoly zsq(-1, {Int(1), Int(-2), Int(1)});
  LaurentPoly acc;
  LaurentPoly power = LaurentPoly::one();
  long k = 0;
  for (long e = has_odd ? 1 : 0; e <= nabla.hi(); e += 2) {
    while (k < (e - (has_odd ? 1 : 0)) / 2) {
      power *= zsq;
      ++k;
    }
    acc += LaurentPoly(nabla.coeff(e)) * power;
  }
  if (has_odd) {
    LaurentPoly tm1(0, {Int(-1), Int(1)});  // t - 1
    acc *= tm1;
  }
  return acc.unit_normal();
}

SignatureValue signature(const LinkDiagram& d) {
  if (!d.is_connected())
    throw precondition_error("split diagram: signature undefined here");
  std::vector<int> color = d.checkerboard_colors();

  auto compute = [&](int white) {
    // Collect white faces; Goeritz matrix over them minus one.
    std::vector<int> white_faces;
    std::vector<int> index(d.face_count(), -1);
    for (int f = 0; f < d.face_count(); ++f)
      if (color[f] == white) {
        index[f] = static_cast<int>(white_faces.size());
        white_faces.push_back(f);
      }
    int m = static_cast<int>(white_faces.size());
    std::vector<std::vector<Rat>> gp(m, std::vector<Rat>(m, Rat(0)));
    int mu = 0;
    for (int k = 0; k < d.crossing_count(); ++k) {
      const Crossing& x = d.crossings()[k];
      int f0 = d.corner_face(k, 0);
      int f2 = d.corner_face(k, 2);
      int f1 = d.corner_face(k, 1);
      int f3 = d.corner_face(k, 3);
      if (color[f0] != color[f2] || color[f1] != color[f3])
        throw validation_error("opposite corners differ in color");
      int eta = color[f0] == white ? -1 : 1;
      int wa, wb;  // the two white corners
      if (color[f0] == white) {
        wa = f0;
        wb = f2;
      } else {
        wa = f1;
        wb = f3;
      }
      if (wa != wb) {
        int i = index[wa], j = index[wb];
        gp[i][j] -= eta;
        gp[j][i] -= eta;
      }
      // Gordon-Litherland correction: type II when the corner between the
      // two incoming strands is black.
      int in_in_corner = x.sign > 0 ? 0 : 3;
      if (color[d.corner_face(k, in_in_corner)] != white) mu += eta;
    }
    for (int i = 0; i < m; ++i) {
      Rat s(0);
      for (int j = 0; j < m; ++j)
        if (j != i) s += gp[i][j];
      gp[i][i] = -s;
    }
    SymRatMatrix g(m - 1);
    for (int i = 1; i < m; ++i)
      for (int j = 1; j < m; ++j) g.set(i - 1, j - 1, gp[i][j]);
    Inertia in = m > 1 ? signature_exact(g) : Inertia{};
    return in.n_plus - in.n_minus - mu;
  };

  int s0 = compute(0);
  int s1 = compute(1);
  if (s0 != s1)
    throw validation_error("checkerboard surfaces disagree on signature");
  return SignatureValue{s0};
}

GenusInfo genus_alternating(const LinkDiagram& d, const CoeffSeq& c) {
  if (!d.is_connected()) throw precondition_error("split diagram");
  int l = static_cast<int>(c.length());
  int mu = d.component_count();
  int span_minus = l - 1 - (mu - 1);
  if (span_minus < 0 || span_minus % 2 != 0)
    throw validation_error("Alexander span has wrong parity for genus");
  GenusInfo g;
  g.from_span = span_minus / 2;
  SeifertData s = seifert_circles(d);
  g.from_seifert = seifert_genus(d, s);
  return g;
}

}  // namespace altk
