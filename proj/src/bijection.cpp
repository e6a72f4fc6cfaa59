#include "fishbij/bijection.hpp"

#include <algorithm>

namespace fishbij {

namespace {

constexpr int kDirN = static_cast<int>(Dir::N);
constexpr int kDirE = static_cast<int>(Dir::E);
constexpr int kDirS = static_cast<int>(Dir::S);
constexpr int kDirW = static_cast<int>(Dir::W);

// Strip step taken when walking away from a cell in a compass direction:
// N climbs the ascending strip, E descends the descending strip, S descends
// the ascending strip, W climbs the descending strip.
EdgeSlot step_slot(Dir d) {
  switch (d) {
    case Dir::N: return RU;
    case Dir::E: return RL;
    case Dir::S: return LL;
    case Dir::W: return LU;
  }
  return RU;
}

// Nearest stem cell strictly beyond x in direction d; -1 if the strip ends
// without one.
CellId stem_neighbor(const Fish& f, const std::vector<CellKind>& kinds,
                     CellId x, Dir d) {
  EdgeSlot s = step_slot(d);
  CellId y = f.cells()[x].get(s);
  while (y >= 0 && !kinds[y].stem) y = f.cells()[y].get(s);
  return y;
}

// Algorithm shared by every rooting: BFS over stem-cell adjacency from a given
// root cell.  The root keeps root_label; every other node is labeled by the
// direction in which it was found.
StemTree stem_tree_at(const Fish& f, CellId root_cell, Dir root_label,
                      bool generalized, std::vector<CellId>* cell_of_node) {
  std::vector<CellKind> kinds = classify_cells(f);
  if (!kinds[root_cell].stem)
    fail(ErrorKind::Internal, "stem tree rooted at a non-stem cell");
  StemTree s;
  s.generalized_root = generalized;
  s.nodes.push_back(StemNode{root_label, {-1, -1, -1, -1}});
  std::vector<CellId> cells{root_cell};
  std::vector<CellId> parent_cell{-1};
  std::vector<int> node_of(f.cell_count(), -1);
  node_of[root_cell] = 0;
  for (size_t qi = 0; qi < cells.size(); ++qi) {
    CellId xc = cells[qi];
    for (int d = 0; d < 4; ++d) {
      CellId v = stem_neighbor(f, kinds, xc, static_cast<Dir>(d));
      if (v < 0 || v == parent_cell[qi]) continue;
      if (node_of[v] >= 0)
        fail(ErrorKind::Internal, "stem cells do not form a tree");
      int id = static_cast<int>(s.nodes.size());
      s.nodes.push_back(StemNode{static_cast<Dir>(d), {-1, -1, -1, -1}});
      s.nodes[qi].child[d] = id;
      node_of[v] = id;
      cells.push_back(v);
      parent_cell.push_back(xc);
    }
  }
  s.validate();
  if (cell_of_node) *cell_of_node = cells;
  return s;
}

}  // namespace

StripRef MarkedFish::strip_ref() const {
  std::vector<StripRef> all = strips(fish, Orientation::Descending);
  if (strip < 0 || strip >= static_cast<int>(all.size()))
    fail(ErrorKind::BadStripIndex,
         "strip index " + std::to_string(strip) + " out of range (fish has " +
             std::to_string(all.size()) + " descending strips)");
  return all[strip];
}

StemTree stem_tree(const Fish& f, const StripRef& q,
                   std::vector<CellId>* cell_of_node) {
  if (q.orientation != Orientation::Descending)
    fail(ErrorKind::BadCell, "stem tree needs a descending strip");
  for (CellId c : q.cells) f.cell(c);  // range check
  std::vector<CellKind> kinds = classify_cells(f);
  for (CellId x : q.cells)  // cells are listed top to bottom
    if (kinds[x].stem) return stem_tree_at(f, x, Dir::E, false, cell_of_node);
  fail(ErrorKind::BadCell, "strip has no stem cell");
}

// --- Algorithm C -------------------------------------------------------------

namespace {

struct FishBuilder {
  RawComplex raw;

  CellId walk(CellId x, EdgeSlot s) const {
    while (raw.cells[x].get(s) >= 0) x = raw.cells[x].get(s);
    return x;
  }

  static EdgeSlot mate(EdgeSlot s) {
    switch (s) {
      case RU: return LL;
      case LL: return RU;
      case RL: return LU;
      case LU: return RL;
    }
    return RU;
  }

  void unglue(CellId x, EdgeSlot s) {
    CellId y = raw.cells[x].get(s);
    if (y < 0 || raw.cells[y].get(mate(s)) != x)
      fail(ErrorKind::Internal, "unglue of a non-glued edge");
    raw.cells[x].set(s, -1);
    raw.cells[y].set(mate(s), -1);
  }

  // C1/C2: plain gluings.
  CellId attach(CellId w, EdgeSlot s) {
    CellId d = raw.add_cell();
    raw.glue(w, s, d);
    return d;
  }

  // C3: insert an ascending strip left of the top of w's descending strip.
  // q = top of Des(w); p = bottom of Asc(q); b_1..b_k the run p..q; cells of
  // the ascending strip immediately above are reglued onto the new strip.
  CellId insert_ascending(CellId w) {
    CellId q = walk(w, LU);
    CellId p = walk(q, LL);
    std::vector<CellId> b;
    for (CellId x = p;; x = raw.cells[x].get(RU)) {
      b.push_back(x);
      if (x == q) break;
      if (raw.cells[x].get(RU) < 0)
        fail(ErrorKind::Internal, "ascending run does not reach the strip top");
    }
    const int k = static_cast<int>(b.size());
    int ell = 0;
    while (ell < k && raw.cells[b[ell]].lu >= 0) ++ell;
    for (int i = ell; i < k; ++i)
      if (raw.cells[b[i]].lu >= 0)
        fail(ErrorKind::Internal, "upper neighbors do not form a prefix");
    std::vector<CellId> a(ell);
    for (int i = 0; i < ell; ++i) a[i] = raw.cells[b[i]].lu;
    for (int i = 0; i + 1 < ell; ++i)
      if (raw.cells[a[i]].ru != a[i + 1])
        fail(ErrorKind::Internal, "upper neighbors are not consecutive");
    std::vector<CellId> c(k);
    for (int i = 0; i < k; ++i) c[i] = raw.add_cell();
    for (int i = 0; i < ell; ++i) {
      unglue(a[i], RL);
      raw.glue(a[i], RL, c[i]);
    }
    for (int i = 0; i < k; ++i) raw.glue(c[i], RL, b[i]);
    for (int i = 0; i + 1 < k; ++i) raw.glue(c[i], RU, c[i + 1]);
    return c[k - 1];
  }

  // C4: mirror of C3 below the bottom of w's ascending strip.
  CellId insert_descending(CellId w) {
    CellId q = walk(w, LL);
    CellId p = walk(q, LU);
    std::vector<CellId> b;
    for (CellId x = p;; x = raw.cells[x].get(RL)) {
      b.push_back(x);
      if (x == q) break;
      if (raw.cells[x].get(RL) < 0)
        fail(ErrorKind::Internal, "descending run does not reach the strip bottom");
    }
    const int k = static_cast<int>(b.size());
    int ell = 0;
    while (ell < k && raw.cells[b[ell]].ll >= 0) ++ell;
    for (int i = ell; i < k; ++i)
      if (raw.cells[b[i]].ll >= 0)
        fail(ErrorKind::Internal, "lower neighbors do not form a prefix");
    std::vector<CellId> a(ell);
    for (int i = 0; i < ell; ++i) a[i] = raw.cells[b[i]].ll;
    for (int i = 0; i + 1 < ell; ++i)
      if (raw.cells[a[i]].rl != a[i + 1])
        fail(ErrorKind::Internal, "lower neighbors are not consecutive");
    std::vector<CellId> c(k);
    for (int i = 0; i < k; ++i) c[i] = raw.add_cell();
    for (int i = 0; i < ell; ++i) {
      unglue(a[i], RU);
      raw.glue(a[i], RU, c[i]);
    }
    for (int i = 0; i < k; ++i) raw.glue(c[i], RU, b[i]);
    for (int i = 0; i + 1 < k; ++i) raw.glue(c[i], RL, c[i + 1]);
    return c[k - 1];
  }

  CellId add_child(CellId wc, Dir label) {
    switch (label) {
      case Dir::N: return attach(wc, RU);
      case Dir::E: return attach(wc, RL);
      case Dir::W: return insert_ascending(wc);
      case Dir::S: return insert_descending(wc);
    }
    fail(ErrorKind::Internal, "bad child label");
  }
};

BuildResult build_fish_impl(const StemTree& s,
                            const std::vector<std::vector<Dir>>* orders) {
  if (s.empty()) fail(ErrorKind::EmptyTree, "cannot build a fish from an empty tree");
  s.validate();
  FishBuilder builder;
  std::vector<CellId> cell_of_node(s.nodes.size(), -1);
  cell_of_node[0] = builder.raw.add_cell();
  std::vector<int> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    static const Dir kDefault[4] = {Dir::N, Dir::E, Dir::S, Dir::W};
    const Dir* dirs = kDefault;
    size_t ndirs = 4;
    if (orders) {
      dirs = (*orders)[u].data();
      ndirs = (*orders)[u].size();
    }
    int processed = 0, present = 0;
    bool done[4] = {false, false, false, false};
    for (int d = 0; d < 4; ++d) present += s.nodes[u].child[d] >= 0;
    for (size_t j = 0; j < ndirs; ++j) {
      int di = static_cast<int>(dirs[j]);
      if (done[di]) fail(ErrorKind::Range, "child order repeats a direction");
      done[di] = true;
      int v = s.nodes[u].child[di];
      if (v < 0) continue;
      cell_of_node[v] = builder.add_child(cell_of_node[u], dirs[j]);
      queue.push_back(v);
      ++processed;
    }
    if (processed != present)
      fail(ErrorKind::Range, "child order does not cover every child once");
  }
  std::vector<CellId> perm;
  BuildResult r{Fish::canonicalize(builder.raw, &perm), {}};
  r.cell_of_node.resize(cell_of_node.size());
  for (size_t i = 0; i < cell_of_node.size(); ++i)
    r.cell_of_node[i] = perm[cell_of_node[i]];
  return r;
}

}  // namespace

BuildResult build_fish(const StemTree& s) { return build_fish_impl(s, nullptr); }

BuildResult build_fish_ordered(
    const StemTree& s, const std::vector<std::vector<Dir>>& child_order_per_node) {
  if (child_order_per_node.size() != s.nodes.size())
    fail(ErrorKind::Range, "need one child order per node");
  return build_fish_impl(s, &child_order_per_node);
}

// --- Marked fish and jaw bijections ------------------------------------------

MarkedFish phi(const TernaryTree& t) {
  if (t.empty()) fail(ErrorKind::EmptyTree, "phi is defined on nonempty trees");
  BuildResult r = build_fish(to_stem_tree(t, Dir::E));
  return MarkedFish{r.fish, descending_strip_index_of(r.fish, r.cell_of_node[0])};
}

TernaryTree phi_inv(const MarkedFish& m) {
  return order_children(stem_tree(m.fish, m.strip_ref()));
}

Fish phi_left(const TernaryTree& t) {
  if (t.empty()) fail(ErrorKind::EmptyTree, "phi_left is defined on nonempty trees");
  int bad = first_negative_abscissa_node(t);
  if (bad >= 0)
    fail(ErrorKind::NotLeftTree, "node at path \"" + node_path(t, bad) +
                                     "\" has negative abscissa");
  return build_fish(to_stem_tree(t, Dir::E)).fish;
}

TernaryTree phi_left_inv(const Fish& f) {
  return order_children(stem_tree(f, jaw(f)));
}

// --- Tail bijection ----------------------------------------------------------

namespace {

// Ternary tree of the stem subtree rooted at node u (slot placement from each
// node's own label, as in order_children).
TernaryTree tern_of(const StemTree& s, int u) {
  if (u < 0) return TernaryTree();
  auto slot_of = [](Dir w, Dir c) -> int {
    bool ew = (w == Dir::E || w == Dir::W);
    Dir left = ew ? Dir::N : Dir::E;
    Dir right = ew ? Dir::S : Dir::W;
    if (c == left) return 0;
    if (c == w) return 1;
    if (c == right) return 2;
    return -1;
  };
  const StemNode& nu = s.nodes[u];
  TernaryTree slots[3];
  for (int d = 0; d < 4; ++d) {
    int v = nu.child[d];
    if (v < 0) continue;
    int slot = slot_of(nu.label, s.nodes[v].label);
    if (slot < 0)
      fail(ErrorKind::InconsistentLabels, "child label without a slot");
    slots[slot] = tern_of(s, v);
  }
  return TernaryTree::node(slots[0], slots[1], slots[2]);
}

}  // namespace

TreePair tails_to_pair(const Fish& f, CellId tail) {
  if (!is_tail(f, tail)) fail(ErrorKind::NotATail, "marked cell is not a tail");
  GrowResult grown = glue_upper_tracked(f, tail);
  CellId pcell = grown.new_cell;
  std::vector<CellId> cell_of_node;
  std::vector<StripRef> all = strips(grown.fish, Orientation::Descending);
  StemTree s = stem_tree(
      grown.fish, all[descending_strip_index_of(grown.fish, pcell)], &cell_of_node);
  if (cell_of_node[0] != pcell)
    fail(ErrorKind::Internal, "attached cell is not the root of its strip");
  int tnode = s.nodes[0].child[kDirS];
  if (tnode < 0 || s.nodes[0].child[kDirN] >= 0 ||
      s.nodes[0].child[kDirE] >= 0 || s.nodes[0].child[kDirW] >= 0)
    fail(ErrorKind::Internal, "attached cell should have exactly an S child");
  if (s.nodes[tnode].child[kDirE] >= 0 || s.nodes[tnode].child[kDirN] >= 0)
    fail(ErrorKind::Internal, "marked tail gained unexpected children");
  return TreePair{tern_of(s, s.nodes[tnode].child[kDirS]),
                  tern_of(s, s.nodes[tnode].child[kDirW])};
}

TailedFish pair_to_tailed_fish(const TreePair& p) {
  TernaryTree t = TernaryTree::node(
      TernaryTree(), TernaryTree(),
      TernaryTree::node(TernaryTree(), p.first, p.second));
  BuildResult r = build_fish(to_stem_tree(t, Dir::E));
  CellId pcell = r.cell_of_node[0];
  const Cell& pc = r.fish.cell(pcell);
  if (pc.ru >= 0 || pc.rl >= 0 || pc.lu >= 0 || pc.ll < 0)
    fail(ErrorKind::Internal, "root cell is not a plainly attached tail");
  CellId tcell = pc.ll;
  // Peel the attached cell off again.
  RawComplex raw;
  raw.cells.reserve(r.fish.cell_count() - 1);
  for (CellId c = 0; c < r.fish.cell_count(); ++c) {
    if (c == pcell) continue;
    Cell cell = r.fish.cell(c);
    for (EdgeSlot slot : {RU, RL, LU, LL}) {
      CellId v = cell.get(slot);
      if (v == pcell) cell.set(slot, -1);
      else if (v > pcell) cell.set(slot, v - 1);
    }
    raw.cells.push_back(cell);
  }
  std::vector<CellId> perm;
  TailedFish out{Fish::canonicalize(raw, &perm), -1};
  out.tail = perm[tcell > pcell ? tcell - 1 : tcell];
  return out;
}

// --- Symmetric fish ----------------------------------------------------------

namespace {

// Appends a copy of fragment `src` to s and returns the index of its root.
int append_stem(StemTree& s, const StemTree& src) {
  int base = static_cast<int>(s.nodes.size());
  for (const StemNode& n : src.nodes) {
    StemNode copy = n;
    for (int d = 0; d < 4; ++d)
      if (copy.child[d] >= 0) copy.child[d] += base;
    s.nodes.push_back(copy);
  }
  return base;
}

}  // namespace

TreePair symmetric_to_pair(const Fish& f) {
  std::vector<CellId> sigma;
  Fish conj = conjugate_mapped(f, &sigma);
  if (conj != f) fail(ErrorKind::NotSymmetric, "fish differs from its conjugate");
  std::vector<CellId> stems = stem_cells(f);
  CellId terminal = -1;
  for (CellId c : stems) {
    if (sigma[c] != c) continue;
    if (terminal >= 0)
      fail(ErrorKind::Internal, "more than one self-conjugate stem cell");
    terminal = c;
  }
  if (terminal < 0)
    fail(ErrorKind::Internal, "no self-conjugate stem cell");
  if (is_tail(f, terminal)) {
    TreePair p = tails_to_pair(f, terminal);
    if (p.first != p.second)
      fail(ErrorKind::Internal, "terminal tail did not split symmetrically");
    return TreePair{p.first, TernaryTree()};
  }
  StemTree s = stem_tree_at(f, terminal, Dir::S, true, nullptr);
  return TreePair{tern_of(s, s.nodes[0].child[kDirS]),
                  tern_of(s, s.nodes[0].child[kDirE])};
}

Fish pair_to_symmetric(const TreePair& p) {
  Fish out = Fish::head_fish();
  if (p.second.empty()) {
    // Odd number of tails: the terminal stem cell is the marked tail of the
    // self-paired tail decomposition.
    out = pair_to_tailed_fish(TreePair{p.first, p.first}).fish;
  } else {
    StemTree s;
    s.generalized_root = true;
    s.nodes.push_back(StemNode{Dir::S, {-1, -1, -1, -1}});
    if (!p.first.empty()) {
      StemTree sub = to_stem_tree(p.first, Dir::S, false);
      s.nodes[0].child[kDirS] = append_stem(s, sub);
      s.nodes[0].child[kDirW] = append_stem(s, mirror_labels(sub));
    }
    StemTree sub = to_stem_tree(p.second, Dir::E, false);
    s.nodes[0].child[kDirE] = append_stem(s, sub);
    s.nodes[0].child[kDirN] = append_stem(s, mirror_labels(sub));
    s.validate();
    out = build_fish(s).fish;
  }
  if (!is_symmetric(out))
    fail(ErrorKind::Internal, "rebuilt fish is not symmetric");
  return out;
}

}  // namespace fishbij
