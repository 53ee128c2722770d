#include "altk/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "altk/errors.hpp"

namespace altk {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int LinkDiagram::successor(int arc) const {
  const auto& [lo, hi] = blocks_[comp_of_arc_[arc]];
  return arc == hi ? lo : arc + 1;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (const Crossing& x : crossings_) w += x.sign;
  return w;
}

std::pair<int, int> LinkDiagram::arc_faces(int arc) const {
  // The face traced by the dart leaving the exit end, and by the reverse dart.
  ArcEnd ex = arc_exit_[arc];
  ArcEnd en = arc_enter_[arc];
  // corner following arrival at enter slot: corner (slot, slot+1)
  int f1 = corner_face_[en.crossing][en.slot];
  int f2 = corner_face_[ex.crossing][ex.slot];
  return {f1, f2};
}

std::vector<int> LinkDiagram::checkerboard_colors() const {
  std::vector<int> color(face_count_, -1);
  std::vector<int> stack;
  for (int start = 0; start < face_count_; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int arc = 1; arc <= arc_count(); ++arc) {
        auto [u, v] = arc_faces(arc);
        int other = -1;
        if (u == f) other = v;
        if (v == f) other = u;
        if (other < 0) continue;
        if (color[other] == -1) {
          color[other] = 1 - color[f];
          stack.push_back(other);
        } else if (color[other] == color[f]) {
          throw validation_error("faces are not checkerboard colorable");
        }
      }
    }
  }
  return color;
}

bool LinkDiagram::is_alternating() const {
  for (int arc = 1; arc <= arc_count(); ++arc)
    if (exit_is_over(arc) == enter_is_over(arc)) return false;
  return true;
}

bool LinkDiagram::is_reduced() const {
  // A crossing is nugatory exactly when two opposite corners lie on the same
  // face.
  for (int k = 0; k < crossing_count(); ++k) {
    if (corner_face_[k][0] == corner_face_[k][2]) return false;
    if (corner_face_[k][1] == corner_face_[k][3]) return false;
  }
  return true;
}

bool LinkDiagram::is_special_alternating() const {
  if (!is_alternating()) return false;
  for (const Crossing& x : crossings_)
    if (x.sign != crossings_[0].sign) return false;
  return true;
}

LinkDiagram LinkDiagram::mirror() const {
  // Switching every crossing keeps arc labels and orientations; the PD tuple
  // rotates so it starts at the new incoming under-strand.
  std::vector<std::array<int, 4>> tuples;
  std::vector<int> signs;
  tuples.reserve(crossings_.size());
  for (const Crossing& x : crossings_) {
    const auto& a = x.arcs;
    if (x.sign > 0)
      tuples.push_back({a[1], a[2], a[3], a[0]});
    else
      tuples.push_back({a[3], a[0], a[1], a[2]});
    signs.push_back(-x.sign);
  }
  return from_tuples(tuples, signs);
}

std::string LinkDiagram::pd_code() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    if (i) os << " ";
    const auto& a = crossings_[i].arcs;
    os << "X(" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << ")";
  }
  return os.str();
}

LinkDiagram LinkDiagram::from_tuples(
    const std::vector<std::array<int, 4>>& tuples,
    const std::vector<int>& expected_signs) {
  if (tuples.empty()) throw validation_error("empty diagram");
  int c = static_cast<int>(tuples.size());
  int n_arcs = 2 * c;

  std::vector<int> occurrences(n_arcs + 1, 0);
  for (const auto& t : tuples)
    for (int a : t) {
      if (a < 1 || a > n_arcs)
        throw validation_error("arc label " + std::to_string(a) +
                               " out of range 1.." + std::to_string(n_arcs));
      ++occurrences[a];
    }
  for (int a = 1; a <= n_arcs; ++a)
    if (occurrences[a] != 2)
      throw validation_error("arc label " + std::to_string(a) + " appears " +
                             std::to_string(occurrences[a]) +
                             " times, expected 2");

  // Strand components: under pair (a,c) and over pair (b,d) each belong to
  // one strand.
  UnionFind uf(n_arcs + 1);
  for (const auto& t : tuples) {
    uf.unite(t[0], t[2]);
    uf.unite(t[1], t[3]);
  }

  LinkDiagram d;
  d.comp_of_arc_.assign(n_arcs + 1, -1);
  std::map<int, std::pair<int, int>> ranges;  // root -> [min,max]
  for (int a = 1; a <= n_arcs; ++a) {
    int r = uf.find(a);
    auto it = ranges.find(r);
    if (it == ranges.end())
      ranges.emplace(r, std::make_pair(a, a));
    else {
      it->second.first = std::min(it->second.first, a);
      it->second.second = std::max(it->second.second, a);
    }
  }
  // Components must occupy consecutive label blocks.
  std::vector<std::pair<int, int>> blocks;
  for (const auto& [root, range] : ranges) blocks.push_back(range);
  std::sort(blocks.begin(), blocks.end());
  int expect = 1;
  for (const auto& [lo, hi] : blocks) {
    if (lo != expect)
      throw validation_error("component labels are not consecutive at arc " +
                             std::to_string(lo));
    expect = hi + 1;
  }
  if (expect != n_arcs + 1)
    throw validation_error("component labels do not cover 1..2c");
  for (int a = 1; a <= n_arcs; ++a) {
    int r = uf.find(a);
    auto range = ranges[r];
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i] == range) d.comp_of_arc_[a] = static_cast<int>(i);
  }
  // Verify each block is a single strand: every label in [lo,hi] shares the
  // union-find root.
  for (const auto& [lo, hi] : blocks)
    for (int a = lo; a <= hi; ++a)
      if (uf.find(a) != uf.find(lo))
        throw validation_error("component block mixes strands at arc " +
                               std::to_string(a));
  d.blocks_ = blocks;

  auto succ = [&](int arc) {
    const auto& [lo, hi] = d.blocks_[d.comp_of_arc_[arc]];
    return arc == hi ? lo : arc + 1;
  };

  // Assign signs by the successor rule and record arc endpoints. On 2-arc
  // components both over-strand readings satisfy the successor rule, so the
  // assignment backtracks over the candidates until every arc enters and
  // exits exactly once.
  std::vector<std::vector<int>> candidates(c);
  for (int k = 0; k < c; ++k) {
    const auto& t = tuples[k];
    if (succ(t[0]) != t[2])
      throw validation_error(
          "crossing " + std::to_string(k + 1) +
          ": under-strand does not run from slot 1 to slot 3");
    if (succ(t[1]) == t[3]) candidates[k].push_back(1);
    if (succ(t[3]) == t[1]) candidates[k].push_back(-1);
    if (candidates[k].empty())
      throw validation_error("crossing " + std::to_string(k + 1) +
                             ": over-strand labels are not consecutive");
    if (k < static_cast<int>(expected_signs.size()) &&
        candidates[k].size() == 2 && expected_signs[k] == -1)
      std::swap(candidates[k][0], candidates[k][1]);
  }
  d.arc_exit_.assign(n_arcs + 1, ArcEnd{});
  d.arc_enter_.assign(n_arcs + 1, ArcEnd{});
  std::vector<int> signs(c, 0);
  auto try_set = [&](std::vector<ArcEnd>& v, int arc, int crossing, int slot) {
    if (v[arc].crossing != -1) return false;
    v[arc] = {crossing, slot};
    return true;
  };
  std::function<bool(int)> place = [&](int k) -> bool {
    if (k == c) return true;
    const auto& t = tuples[k];
    for (int sign : candidates[k]) {
      int over_in = sign > 0 ? t[1] : t[3];
      int over_out = sign > 0 ? t[3] : t[1];
      int in_slot = sign > 0 ? 1 : 3;
      int out_slot = sign > 0 ? 3 : 1;
      bool ok = try_set(d.arc_enter_, t[0], k, 0);
      bool ok2 = ok && try_set(d.arc_exit_, t[2], k, 2);
      bool ok3 = ok2 && try_set(d.arc_enter_, over_in, k, in_slot);
      bool ok4 = ok3 && try_set(d.arc_exit_, over_out, k, out_slot);
      if (ok4) {
        signs[k] = sign;
        if (place(k + 1)) return true;
      }
      if (ok4) d.arc_exit_[over_out] = ArcEnd{};
      if (ok3) d.arc_enter_[over_in] = ArcEnd{};
      if (ok2) d.arc_exit_[t[2]] = ArcEnd{};
      if (ok) d.arc_enter_[t[0]] = ArcEnd{};
    }
    return false;
  };
  if (!place(0))
    throw validation_error(
        "no consistent over-strand orientation (some arc would enter or exit "
        "two crossings)");
  d.crossings_.reserve(tuples.size());
  for (int k = 0; k < c; ++k) {
    Crossing x;
    x.arcs = tuples[k];
    x.sign = signs[k];
    d.crossings_.push_back(x);
  }
  for (int a = 1; a <= n_arcs; ++a) {
    if (d.arc_enter_[a].crossing == -1 || d.arc_exit_[a].crossing == -1)
      throw validation_error("arc " + std::to_string(a) +
                             " lacks an endpoint (orientation mismatch)");
  }

  // Graph connectivity of the 4-valent graph.
  UnionFind gf(c);
  for (int a = 1; a <= n_arcs; ++a)
    gf.unite(d.arc_exit_[a].crossing, d.arc_enter_[a].crossing);
  std::vector<int> roots;
  for (int k = 0; k < c; ++k) roots.push_back(gf.find(k));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  d.graph_components_ = static_cast<int>(roots.size());

  // Face tracing. Dart 2*(arc-1): travels along the orientation;
  // 2*(arc-1)+1: against it. Each dart arrives at a slot; turning to the
  // next slot counterclockwise walks the boundary of one face.
  int n_darts = 2 * n_arcs;
  std::vector<int> dart_face(n_darts, -1);
  d.corner_face_.assign(c, {-1, -1, -1, -1});
  d.face_sizes_.clear();
  int face_id = 0;
  for (int start = 0; start < n_darts; ++start) {
    if (dart_face[start] != -1) continue;
    int dart = start;
    int size = 0;
    do {
      dart_face[dart] = face_id;
      ++size;
      int arc = dart / 2 + 1;
      ArcEnd arrive = (dart % 2 == 0) ? d.arc_enter_[arc] : d.arc_exit_[arc];
      int s = arrive.slot;
      int s2 = (s + 1) % 4;
      d.corner_face_[arrive.crossing][s] = face_id;
      int next_arc = tuples[arrive.crossing][s2];
      ArcEnd ex = d.arc_exit_[next_arc];
      if (ex.crossing == arrive.crossing && ex.slot == s2) {
        dart = 2 * (next_arc - 1);
      } else {
        dart = 2 * (next_arc - 1) + 1;
      }
    } while (dart != start);
    d.face_sizes_.push_back(size);
    ++face_id;
  }
  d.face_count_ = face_id;
  for (int k = 0; k < c; ++k)
    for (int s = 0; s < 4; ++s)
      if (d.corner_face_[k][s] < 0)
        throw validation_error("face tracing left a corner unassigned");

  // Planarity: every connected piece contributes crossings + 2 faces.
  if (d.face_count_ != c + 2 * d.graph_components_)
    throw validation_error(
        "face count violates planarity: got " + std::to_string(d.face_count_) +
        ", expected " + std::to_string(c + 2 * d.graph_components_));

  return d;
}

LinkDiagram parse_pd(const std::string& text) {
  std::vector<std::array<int, 4>> tuples;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != 'X' && text[i] != 'x')
      throw parse_error("expected 'X' at position " + std::to_string(i), i);
    ++i;
    skip_ws();
    if (i >= text.size() || (text[i] != '(' && text[i] != '['))
      throw parse_error("expected '(' at position " + std::to_string(i), i);
    char close = text[i] == '(' ? ')' : ']';
    ++i;
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j == i)
        throw parse_error("expected arc label at position " + std::to_string(i),
                          i);
      t[k] = std::stoi(text.substr(i, j - i));
      i = j;
      skip_ws();
      if (k < 3) {
        if (i >= text.size() || text[i] != ',')
          throw parse_error("expected ',' at position " + std::to_string(i), i);
        ++i;
      }
    }
    if (i >= text.size() || text[i] != close)
      throw parse_error("expected closing bracket at position " +
                            std::to_string(i),
                        i);
    ++i;
    tuples.push_back(t);
    skip_ws();
  }
  if (tuples.empty()) throw parse_error("empty PD code", 0);
  return LinkDiagram::from_tuples(tuples);
}

DiagramPredicates diagram_predicates(const LinkDiagram& d) {
  DiagramPredicates p;
  p.is_alternating = d.is_alternating();
  p.is_reduced = d.is_reduced();
  p.is_special_alternating = d.is_special_alternating();
  p.component_count = d.component_count();
  p.writhe = d.writhe();
  return p;
}

LinkDiagram assemble_diagram(const std::vector<std::array<int, 4>>& tuples,
                             const std::vector<int>& signs) {
  if (tuples.empty()) throw validation_error("empty diagram");
  if (tuples.size() != signs.size())
    throw validation_error("tuple/sign count mismatch");
  // successor along strands, in raw labels
  std::map<int, int> succ;
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    const auto& t = tuples[k];
    int over_in = signs[k] > 0 ? t[1] : t[3];
    int over_out = signs[k] > 0 ? t[3] : t[1];
    if (succ.count(t[0]) || succ.count(over_in))
      throw validation_error("arc exits two crossings in raw diagram");
    succ[t[0]] = t[2];
    succ[over_in] = over_out;
  }
  // Walk components: deterministic order by smallest raw label.
  std::map<int, int> new_label;
  int next = 1;
  for (const auto& [arc, s] : succ) {
    if (new_label.count(arc)) continue;
    int cur = arc;
    do {
      new_label[cur] = next++;
      auto it = succ.find(cur);
      if (it == succ.end())
        throw validation_error("open strand in raw diagram");
      cur = it->second;
    } while (cur != arc);
  }
  std::vector<std::array<int, 4>> relabeled;
  relabeled.reserve(tuples.size());
  for (const auto& t : tuples) {
    std::array<int, 4> r;
    for (int s = 0; s < 4; ++s) {
      auto it = new_label.find(t[s]);
      if (it == new_label.end())
        throw validation_error("arc id missing from strand walk");
      r[s] = it->second;
    }
    relabeled.push_back(r);
  }
  LinkDiagram d = LinkDiagram::from_tuples(relabeled, signs);
  for (std::size_t k = 0; k < signs.size(); ++k)
    if (d.crossings()[k].sign != signs[k])
      throw validation_error("sign mismatch after relabeling");
  return d;
}

LinkDiagram connect_sum(const LinkDiagram& d1, const LinkDiagram& d2) {
  int c1 = d1.crossing_count();
  int m2 = d2.component_blocks()[d2.component_of(1)].second;  // block [1..M]
  int shift2 = 2 * c1;

  // Splice d1's arc 1 against a d2 arc whose exit passage type matches, so
  // alternating diagrams stay alternating across the seam.
  int s2 = 1;
  for (int a = 1; a <= m2; ++a) {
    if (d2.exit_is_over(a) == d1.exit_is_over(1)) {
      s2 = a;
      break;
    }
  }

  // Raw ids: the spliced strand walks d1-arc-1-exit -> d2's component from
  // s2 -> back into d1. d1 arcs j >= 2 shift by M; d2 component-1 arcs take
  // 2..M starting after s2; other d2 components move past everything.
  std::vector<std::array<int, 4>> tuples;
  std::vector<int> signs;
  for (int k = 0; k < c1; ++k) {
    const Crossing& x = d1.crossings()[k];
    std::array<int, 4> t;
    for (int s = 0; s < 4; ++s) {
      int a = x.arcs[s];
      if (a != 1) {
        t[s] = m2 + a;
      } else {
        bool is_exit = d1.arc_exit(1).crossing == k && d1.arc_exit(1).slot == s;
        t[s] = is_exit ? 1 : m2 + 1;
      }
    }
    tuples.push_back(t);
    signs.push_back(x.sign);
  }
  for (int k = 0; k < d2.crossing_count(); ++k) {
    const Crossing& x = d2.crossings()[k];
    std::array<int, 4> t;
    for (int s = 0; s < 4; ++s) {
      int a = x.arcs[s];
      if (a == s2) {
        bool is_enter =
            d2.arc_enter(s2).crossing == k && d2.arc_enter(s2).slot == s;
        t[s] = is_enter ? 1 : m2 + 1;
      } else if (a <= m2) {
        t[s] = (a - s2 + m2) % m2 + 1;
      } else {
        t[s] = shift2 + a;
      }
    }
    tuples.push_back(t);
    signs.push_back(x.sign);
  }
  return assemble_diagram(tuples, signs);
}

}  // namespace altk
