#include "altk/seifert.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "altk/errors.hpp"

namespace altk {

namespace {

// Oriented smoothing pairs (in-slot, out-slot): positive crossings connect
// a->d and b->c, negative a->b and d->c.
std::array<std::pair<int, int>, 2> smoothing_pairs(const Crossing& x) {
  if (x.sign > 0) return {{{0, 3}, {1, 2}}};
  return {{{0, 1}, {3, 2}}};
}

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

SeifertData seifert_circles(const LinkDiagram& d) {
  if (!d.is_connected())
    throw precondition_error("split diagram: Seifert data undefined");

  int n_arcs = d.arc_count();
  // smoothed successor: arc entering a crossing continues as the paired out
  // arc.
  std::vector<int> snext(n_arcs + 1, 0);
  for (int k = 0; k < d.crossing_count(); ++k) {
    const Crossing& x = d.crossings()[k];
    for (auto [in, out] : smoothing_pairs(x)) snext[x.arcs[in]] = x.arcs[out];
  }

  SeifertData s;
  s.circle_of_arc.assign(n_arcs + 1, -1);
  for (int a = 1; a <= n_arcs; ++a) {
    if (s.circle_of_arc[a] != -1) continue;
    std::vector<int> circle;
    int cur = a;
    do {
      s.circle_of_arc[cur] = static_cast<int>(s.circles.size());
      circle.push_back(cur);
      cur = snext[cur];
    } while (cur != a);
    s.circles.push_back(std::move(circle));
  }

  for (int k = 0; k < d.crossing_count(); ++k) {
    const Crossing& x = d.crossings()[k];
    auto pairs = smoothing_pairs(x);
    int cu = s.circle_of_arc[x.arcs[pairs[0].first]];
    int cv = s.circle_of_arc[x.arcs[pairs[1].first]];
    if (cu == cv)
      throw validation_error("crossing joins a Seifert circle to itself");
    s.edges.emplace_back(cu, cv);
    s.edge_signs.push_back(x.sign);
  }

  // Crossings in cyclic order around each circle: walking the circle's arcs,
  // each step jumps across the crossing the arc enters.
  s.attachments.resize(s.circles.size());
  for (std::size_t ci = 0; ci < s.circles.size(); ++ci) {
    for (int arc : s.circles[ci])
      s.attachments[ci].push_back(d.arc_enter(arc).crossing);
  }
  return s;
}

Arrangement seifert_arrangement(const LinkDiagram& d, const SeifertData& s) {
  Arrangement ar;
  UF uf(d.face_count());
  for (int k = 0; k < d.crossing_count(); ++k) {
    const Crossing& x = d.crossings()[k];
    // The band's region merges the two opposite corners between the smoothed
    // strands.
    if (x.sign > 0)
      uf.unite(d.corner_face(k, 0), d.corner_face(k, 2));
    else
      uf.unite(d.corner_face(k, 1), d.corner_face(k, 3));
  }
  ar.face_class.assign(d.face_count(), -1);
  std::map<int, int> ids;
  for (int f = 0; f < d.face_count(); ++f) {
    int r = uf.find(f);
    auto it = ids.find(r);
    if (it == ids.end()) it = ids.emplace(r, static_cast<int>(ids.size())).first;
    ar.face_class[f] = it->second;
  }
  ar.class_count = static_cast<int>(ids.size());

  ar.middle_class.resize(d.crossing_count());
  for (int k = 0; k < d.crossing_count(); ++k) {
    const Crossing& x = d.crossings()[k];
    int corner = x.sign > 0 ? 0 : 1;
    ar.middle_class[k] = ar.face_class[d.corner_face(k, corner)];
  }

  ar.circle_sides.resize(s.circle_count());
  for (int ci = 0; ci < s.circle_count(); ++ci) {
    int arc = s.circles[ci].front();
    auto [f1, f2] = d.arc_faces(arc);
    ar.circle_sides[ci] = {ar.face_class[f1], ar.face_class[f2]};
    if (ar.circle_sides[ci].first == ar.circle_sides[ci].second)
      throw validation_error("circle with identical side regions");
  }

  // Disjoint circles on the sphere: classes = circles + 1 and the incidence
  // graph is a tree for connected diagrams.
  if (ar.class_count != s.circle_count() + 1)
    throw validation_error("smoothed arrangement region count mismatch");
  return ar;
}

SmoothResult smooth_crossings(const LinkDiagram& d,
                              const std::vector<bool>& smooth_mask) {
  int n_arcs = d.arc_count();
  UF uf(n_arcs + 1);
  for (int k = 0; k < d.crossing_count(); ++k) {
    if (!smooth_mask[k]) continue;
    const Crossing& x = d.crossings()[k];
    for (auto [in, out] : smoothing_pairs(x)) uf.unite(x.arcs[in], x.arcs[out]);
  }
  SmoothResult r;
  std::vector<int> occurrences(n_arcs + 1, 0);
  for (int k = 0; k < d.crossing_count(); ++k) {
    if (smooth_mask[k]) continue;
    const Crossing& x = d.crossings()[k];
    std::array<int, 4> t;
    for (int s = 0; s < 4; ++s) {
      t[s] = uf.find(x.arcs[s]);
      ++occurrences[t[s]];
    }
    r.tuples.push_back(t);
    r.signs.push_back(x.sign);
    r.kept.push_back(k);
  }
  // Free loops: merged strands that never meet a kept crossing.
  std::vector<bool> counted(n_arcs + 1, false);
  for (int a = 1; a <= n_arcs; ++a) {
    int root = uf.find(a);
    if (counted[root]) continue;
    counted[root] = true;
    if (occurrences[root] == 0) ++r.free_loops;
  }
  return r;
}

int seifert_genus(const LinkDiagram& d, const SeifertData& s) {
  int euler = s.circle_count() - d.crossing_count();
  return (2 - d.component_count() - euler) / 2;
}

}  // namespace altk
