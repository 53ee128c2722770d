#include "altk/braid.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "altk/errors.hpp"

namespace altk {

std::vector<int> BraidWord::permutation() const {
  std::vector<int> pos(strands);
  std::iota(pos.begin(), pos.end(), 0);
  // pos[p] = strand currently at position p; track where each start ends.
  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int w : letters) {
    int i = w > 0 ? w : -w;
    std::swap(perm[i - 1], perm[i]);
  }
  // perm[p] = strand (by top position) ending at bottom position p; invert to
  // map top position -> bottom position.
  std::vector<int> out(strands);
  for (int p = 0; p < strands; ++p) out[perm[p]] = p;
  return out;
}

int BraidWord::closure_components() const {
  std::vector<int> p = permutation();
  std::vector<bool> seen(strands, false);
  int cycles = 0;
  for (int s = 0; s < strands; ++s) {
    if (seen[s]) continue;
    ++cycles;
    int cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = p[cur];
    }
  }
  return cycles;
}

std::string BraidWord::str() const {
  std::ostringstream os;
  os << strands << " ;";
  for (int w : letters) os << " " << w;
  return os.str();
}

BraidWord parse_braid(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw parse_error("missing ';' in braid word", 0);
  BraidWord b;
  {
    std::istringstream in(text.substr(0, semi));
    if (!(in >> b.strands)) throw parse_error("missing strand count", 0);
    std::string rest;
    if (in >> rest) throw parse_error("unexpected token before ';'", 0);
  }
  if (b.strands < 2) throw parse_error("strand count must be at least 2", 0);
  std::istringstream in(text.substr(semi + 1));
  int w;
  while (in >> w) {
    if (w == 0) throw parse_error("generator index 0 is invalid", semi);
    int i = w > 0 ? w : -w;
    if (i >= b.strands)
      throw parse_error("generator index " + std::to_string(i) +
                            " out of range for " + std::to_string(b.strands) +
                            " strands",
                        semi);
    b.letters.push_back(w);
  }
  if (!in.eof()) throw parse_error("bad token in braid word", semi);
  if (b.letters.empty()) throw parse_error("empty braid word", semi);
  return b;
}

LinkDiagram braid_closure(const BraidWord& b) {
  int n = b.strands;
  int k = static_cast<int>(b.letters.size());

  std::vector<bool> involved(n + 1, false);
  for (int w : b.letters) {
    int i = w > 0 ? w : -w;
    involved[i] = involved[i + 1] = true;
  }
  for (int p = 1; p <= n; ++p)
    if (!involved[p])
      throw precondition_error(
          "closure has a crossing-free strand (split unknot component)");

  // Raw segment ids seg(p, v) for position p at height v; crossings at level
  // v consume height v-1 and produce height v. Heights without a crossing on
  // p, and the closure seg(p, k) ~ seg(p, 0), merge segments.
  auto seg = [&](int p, int v) { return v * n + (p - 1); };
  std::vector<int> parent(n * (k + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b2) { parent[find(a)] = find(b2); };

  for (int v = 1; v <= k; ++v) {
    int w = b.letters[v - 1];
    int i = w > 0 ? w : -w;
    for (int p = 1; p <= n; ++p)
      if (p != i && p != i + 1) unite(seg(p, v - 1), seg(p, v));
  }
  for (int p = 1; p <= n; ++p) unite(seg(p, k), seg(p, 0));

  std::vector<std::array<int, 4>> tuples;
  std::vector<int> signs;
  for (int v = 1; v <= k; ++v) {
    int w = b.letters[v - 1];
    int i = w > 0 ? w : -w;
    int tl = find(seg(i, v - 1)), tr = find(seg(i + 1, v - 1));
    int bl = find(seg(i, v)), br = find(seg(i + 1, v));
    if (w > 0) {
      // left strand passes over: under-in top right, ccw
      tuples.push_back({tr, tl, bl, br});
      signs.push_back(1);
    } else {
      tuples.push_back({tl, bl, br, tr});
      signs.push_back(-1);
    }
  }
  LinkDiagram d = assemble_diagram(tuples, signs);
  if (d.component_count() != b.closure_components())
    throw validation_error("closure component count mismatch");
  return d;
}

LinkDiagram plat_closure(const BraidWord& b) {
  int n = b.strands;
  int k = static_cast<int>(b.letters.size());
  if (n % 2 != 0)
    throw precondition_error("plat closure needs an even strand count");

  auto seg = [&](int p, int v) { return v * n + (p - 1); };
  std::vector<int> parent(n * (k + 1));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b2) { parent[find(a)] = find(b2); };

  for (int v = 1; v <= k; ++v) {
    int w = b.letters[v - 1];
    int i = w > 0 ? w : -w;
    for (int p = 1; p <= n; ++p)
      if (p != i && p != i + 1) unite(seg(p, v - 1), seg(p, v));
  }
  for (int p = 1; p <= n; p += 2) {
    unite(seg(p, 0), seg(p + 1, 0));  // top caps
    unite(seg(p, k), seg(p + 1, k));  // bottom caps
  }

  // Corner incidences per crossing: TL, TR, BL, BR.
  struct Corners {
    int tl, tr, bl, br;
    int over_first;  // 1 when the TL-BR diagonal is the over strand
  };
  std::vector<Corners> crossings;
  std::map<int, std::vector<std::pair<int, int>>> passages;  // class -> (crossing, corner)
  for (int v = 1; v <= k; ++v) {
    int w = b.letters[v - 1];
    int i = w > 0 ? w : -w;
    Corners c;
    c.tl = find(seg(i, v - 1));
    c.tr = find(seg(i + 1, v - 1));
    c.bl = find(seg(i, v));
    c.br = find(seg(i + 1, v));
    c.over_first = w > 0 ? 1 : 0;
    int id = static_cast<int>(crossings.size());
    passages[c.tl].push_back({id, 0});
    passages[c.tr].push_back({id, 1});
    passages[c.bl].push_back({id, 2});
    passages[c.br].push_back({id, 3});
    crossings.push_back(c);
  }
  if (crossings.empty()) throw precondition_error("empty plat word");
  for (const auto& [cls, ps] : passages)
    if (ps.size() != 2)
      throw precondition_error(
          "plat closure has a crossing-free or tangled strand");
  // Every strand class must meet a crossing.
  std::vector<bool> met(n * (k + 1), false);
  for (const auto& [cls, ps] : passages) met[cls] = true;
  for (int p = 1; p <= n; ++p)
    for (int v = 0; v <= k; ++v)
      if (!met[find(seg(p, v))])
        throw precondition_error("plat closure has a crossing-free component");

  // Trace orientations: walking an arc into a crossing corner exits at the
  // diagonal partner.
  auto diagonal = [](int corner) { return corner ^ 3; };  // 0<->3, 1<->2
  // arc direction: arc_from[cls] = (crossing, corner) where it leaves,
  // arc_to[cls] = where it arrives.
  std::map<int, std::pair<int, int>> arc_from, arc_to;
  for (const auto& [cls, ps] : passages) {
    if (arc_from.count(cls) || arc_to.count(cls)) continue;
    // start a new component here, oriented from ps[0] toward ps[1]
    int cur_cls = cls;
    std::pair<int, int> leave = ps[0];
    while (!arc_from.count(cur_cls)) {
      arc_from[cur_cls] = leave;
      const auto& pp = passages.at(cur_cls);
      std::pair<int, int> arrive = pp[0] == leave ? pp[1] : pp[0];
      arc_to[cur_cls] = arrive;
      auto [kx, corner] = arrive;
      int exit_corner = diagonal(corner);
      const Corners& cc = crossings[kx];
      int next_cls = exit_corner == 0   ? cc.tl
                     : exit_corner == 1 ? cc.tr
                     : exit_corner == 2 ? cc.bl
                                        : cc.br;
      cur_cls = next_cls;
      leave = {kx, exit_corner};
    }
  }

  // Emit PD tuples: counterclockwise from the incoming under corner.
  // Compass ccw order is NE, NW, SW, SE, i.e. corners 1, 0, 2, 3.
  static const int ccw_from[4][4] = {
      {0, 2, 3, 1},  // from NW(0): NW, SW, SE, NE
      {1, 0, 2, 3},  // from NE(1)
      {2, 3, 1, 0},  // from SW(2)
      {3, 1, 0, 2},  // from SE(3)
  };
  std::vector<std::array<int, 4>> tuples;
  std::vector<int> signs;
  for (int kx = 0; kx < static_cast<int>(crossings.size()); ++kx) {
    const Corners& c = crossings[kx];
    auto cls_at = [&](int corner) {
      return corner == 0 ? c.tl : corner == 1 ? c.tr : corner == 2 ? c.bl : c.br;
    };
    // under diagonal corners
    int u1 = c.over_first ? 1 : 0;  // one end of the under diagonal
    int u2 = diagonal(u1);
    int under_in = arc_to.at(cls_at(u1)) == std::make_pair(kx, u1) ? u1 : u2;
    int o1 = c.over_first ? 0 : 1;  // over diagonal
    int o2 = diagonal(o1);
    int over_in = arc_to.at(cls_at(o1)) == std::make_pair(kx, o1) ? o1 : o2;
    std::array<int, 4> t;
    for (int s = 0; s < 4; ++s) t[s] = cls_at(ccw_from[under_in][s]);
    int sign = ccw_from[under_in][1] == over_in ? 1 : -1;
    tuples.push_back(t);
    signs.push_back(sign);
  }
  return assemble_diagram(tuples, signs);
}

bool is_alternating_word(const BraidWord& b) {
  // Every generator appears with one fixed sign, and the signs alternate
  // with the parity of the generator index.
  int parity_sign = 0;  // sign assigned to odd generators
  for (int w : b.letters) {
    int i = w > 0 ? w : -w;
    int s = w > 0 ? 1 : -1;
    int odd_sign = (i % 2 == 1) ? s : -s;
    if (parity_sign == 0)
      parity_sign = odd_sign;
    else if (odd_sign != parity_sign)
      return false;
  }
  return true;
}

}  // namespace altk
