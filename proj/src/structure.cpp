#include "altk/structure.hpp"

#include <algorithm>
#include <numeric>

#include "altk/errors.hpp"
#include "altk/invariants.hpp"
#include "altk/seifert.hpp"

namespace altk {

namespace {

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

TwistProfile twist_regions(const LinkDiagram& d) {
  if (!d.is_connected()) throw precondition_error("split diagram");
  if (!d.is_alternating())
    throw precondition_error("twist regions need an alternating diagram");
  if (!d.is_reduced())
    throw precondition_error(
        "twist regions need a reduced diagram (kinks create degenerate "
        "bigons)");

  int c = d.crossing_count();
  // Corners of each face.
  std::vector<std::vector<std::pair<int, int>>> corners(d.face_count());
  for (int k = 0; k < c; ++k)
    for (int s = 0; s < 4; ++s) corners[d.corner_face(k, s)].push_back({k, s});

  UF uf(c);
  std::vector<std::vector<int>> bigons_of;  // per face id of size 2
  std::vector<bool> region_has_coherent_bigon(c, false);
  std::vector<std::pair<int, int>> bigon_faces;
  for (int f = 0; f < d.face_count(); ++f) {
    if (d.face_sizes()[f] != 2) continue;
    if (corners[f].size() != 2)
      throw validation_error("bigon face without two corners");
    int k1 = corners[f][0].first, k2 = corners[f][1].first;
    if (k1 == k2)
      throw validation_error("degenerate bigon at a single crossing");
    uf.unite(k1, k2);
    bigon_faces.push_back({f, k1});
  }
  // Coherence: some bigon of the region is bounded by arcs of opposite
  // boundary sense (parallel strands).
  for (auto [f, k1] : bigon_faces) {
    int s = -1;
    for (auto [k, cs] : corners[f])
      if (k == k1) s = cs;
    const auto& arcs = d.crossings()[k1].arcs;
    int x = arcs[s];
    int y = arcs[(s + 1) % 4];
    auto sense = [&](int arc) {
      ArcEnd en = d.arc_enter(arc);
      return d.corner_face(en.crossing, en.slot) == f;
    };
    if (sense(x) != sense(y)) region_has_coherent_bigon[uf.find(k1)] = true;
  }

  std::vector<int> region_id(c, -1);
  TwistProfile profile;
  for (int k = 0; k < c; ++k) {
    int r = uf.find(k);
    if (region_id[r] == -1) {
      region_id[r] = static_cast<int>(profile.regions.size());
      profile.regions.push_back({});
    }
    profile.regions[region_id[r]].crossings.push_back(k);
  }
  for (auto& reg : profile.regions) {
    reg.sign = d.crossings()[reg.crossings.front()].sign;
    for (int k : reg.crossings)
      if (d.crossings()[k].sign != reg.sign)
        throw validation_error("twist region with mixed crossing signs");
    reg.coherent = region_has_coherent_bigon[uf.find(reg.crossings.front())];
    if (reg.coherent) profile.mt = std::max(profile.mt, reg.size());
  }
  return profile;
}

TwistConcentration is_twist_concentrated(const LinkDiagram& d) {
  TwistProfile tp = twist_regions(d);
  CoeffSeq c = alexander_pd(d);
  GenusInfo g = genus_alternating(d, c);
  TwistConcentration r;
  r.mt = tp.mt;
  r.genus = g.from_span;
  r.components = d.component_count();
  r.margin = Rat(r.mt - 3) - (Rat(r.genus) + Rat(r.components, 2));
  r.margin.canonicalize();
  r.holds = sgn(r.margin) >= 0;
  return r;
}

int guaranteed_prefix_from_mt(int mt) { return std::max(mt - 3, 0); }

int guaranteed_prefix(const LinkDiagram& d) {
  return guaranteed_prefix_from_mt(twist_regions(d).mt);
}

int Decomposition::max_sum_length() const {
  int m = 0;
  for (const DecompEdge& e : edges) m = std::max(m, e.length);
  return m;
}

namespace {

struct SubDiagram {
  LinkDiagram diagram;
  std::vector<int> orig;  // original crossing index per crossing
};

void decompose_rec(const SubDiagram& sub, Decomposition& out) {
  const LinkDiagram& d = sub.diagram;
  SeifertData s = seifert_circles(d);
  int nc = s.circle_count();

  // A circle supports a Murasugi split exactly when deleting it disconnects
  // the Seifert multigraph; the split groups bands by the component their
  // far circle falls into.
  int best = -1;
  int best_small = 0;
  std::vector<int> best_group;
  for (int cut = 0; cut < nc; ++cut) {
    std::vector<int> comp(nc, -1);
    comp[cut] = -2;
    int ncomp = 0;
    for (int start = 0; start < nc; ++start) {
      if (comp[start] != -1) continue;
      comp[start] = ncomp;
      std::vector<int> stack = {start};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int k = 0; k < d.crossing_count(); ++k) {
          auto [a, b] = s.edges[k];
          int v = -1;
          if (a == u) v = b;
          if (b == u) v = a;
          if (v >= 0 && comp[v] == -1) {
            comp[v] = ncomp;
            stack.push_back(v);
          }
        }
      }
      ++ncomp;
    }
    if (ncomp <= 1) continue;
    // Group 0: the component containing the smallest non-cut circle.
    int lead = -1;
    for (int ci = 0; ci < nc; ++ci)
      if (ci != cut) {
        lead = comp[ci];
        break;
      }
    std::vector<int> group(d.crossing_count());
    int n0 = 0, n1 = 0;
    for (int k = 0; k < d.crossing_count(); ++k) {
      auto [a, b] = s.edges[k];
      int far = a == cut ? b : a;
      group[k] = comp[far] == lead ? 0 : 1;
      (group[k] == 0 ? n0 : n1)++;
    }
    int smaller = std::min(n0, n1);
    if (best < 0 || smaller < best_small) {
      best = cut;
      best_small = smaller;
      best_group = std::move(group);
    }
  }

  if (best < 0) {
    // Star-irreducible leaf; for alternating inputs this is special.
    if (!d.is_special_alternating())
      throw validation_error("decomposition leaf is not special alternating");
    DecompPiece piece;
    piece.diagram = d;
    piece.crossings = sub.orig;
    piece.sign = d.crossings().front().sign;
    int id = static_cast<int>(out.pieces.size());
    for (int oc : sub.orig) out.piece_of_crossing[oc] = id;
    out.pieces.push_back(std::move(piece));
    return;
  }

  // Sum length: half the number of group runs around the cut circle.
  const std::vector<int>& att = s.attachments[best];
  int runs = 0;
  int n_att = static_cast<int>(att.size());
  for (int i = 0; i < n_att; ++i) {
    int prev = best_group[att[(i + n_att - 1) % n_att]];
    int cur = best_group[att[i]];
    if (prev != cur) ++runs;
  }
  if (runs % 2 != 0) throw validation_error("odd run count around circle");
  int length = runs / 2;

  // Build the two sides: smooth away the other group's crossings.
  SubDiagram parts[2];
  for (int side = 0; side < 2; ++side) {
    std::vector<bool> mask(d.crossing_count());
    for (int k = 0; k < d.crossing_count(); ++k) mask[k] = best_group[k] != side;
    SmoothResult sr = smooth_crossings(d, mask);
    parts[side].diagram = assemble_diagram(sr.tuples, sr.signs);
    for (int k : sr.kept) parts[side].orig.push_back(sub.orig[k]);
  }

  // Representative attached crossing on each side, to locate the edge's
  // endpoints after recursion.
  int rep[2] = {-1, -1};
  for (int k : att) {
    if (rep[best_group[k]] < 0) rep[best_group[k]] = sub.orig[k];
  }

  decompose_rec(parts[0], out);
  decompose_rec(parts[1], out);

  DecompEdge e;
  e.a = out.piece_of_crossing[rep[0]];
  e.b = out.piece_of_crossing[rep[1]];
  e.length = length;
  out.edges.push_back(e);
}

}  // namespace

Decomposition decompose_murasugi(const LinkDiagram& d) {
  if (!d.is_connected()) throw precondition_error("split diagram");
  if (!d.is_alternating())
    throw precondition_error("decomposition needs an alternating diagram");
  if (!d.is_reduced())
    throw precondition_error("decomposition needs a reduced diagram");
  Decomposition out;
  out.piece_of_crossing.assign(d.crossing_count(), -1);
  SubDiagram root;
  root.diagram = d;
  root.orig.resize(d.crossing_count());
  std::iota(root.orig.begin(), root.orig.end(), 0);
  decompose_rec(root, out);
  return out;
}

bool sums_below(const Decomposition& dec, int bound) {
  for (const DecompEdge& e : dec.edges)
    if (e.length >= bound) return false;
  return true;
}

}  // namespace altk
