#include "fishbij/ternary.hpp"

#include <algorithm>
#include <functional>

namespace fishbij {

namespace {

// Appends a relocated copy of src's subtree at src_node to out, returning the
// new index.  Children keep preorder layout.
int append_subtree(const std::vector<TreeNode>& src, int src_node,
                   std::vector<TreeNode>& out) {
  int idx = static_cast<int>(out.size());
  out.push_back(TreeNode{});
  for (int s = 0; s < 3; ++s) {
    int c = src[src_node].child[s];
    out[idx].child[s] = (c >= 0) ? append_subtree(src, c, out) : -1;
  }
  return idx;
}

}  // namespace

TernaryTree TernaryTree::leaf() {
  TernaryTree t;
  t.nodes_.push_back(TreeNode{});
  return t;
}

TernaryTree TernaryTree::node(const TernaryTree& left, const TernaryTree& middle,
                              const TernaryTree& right) {
  TernaryTree t;
  t.nodes_.push_back(TreeNode{});
  const TernaryTree* subs[3] = {&left, &middle, &right};
  for (int s = 0; s < 3; ++s) {
    if (!subs[s]->empty())
      t.nodes_[0].child[s] = append_subtree(subs[s]->nodes_, 0, t.nodes_);
  }
  return t;
}

TernaryTree TernaryTree::subtree(int node) const {
  TernaryTree t;
  if (node >= 0 && node < node_count()) append_subtree(nodes_, node, t.nodes_);
  return t;
}

bool TernaryTree::equal(const TernaryTree& o) const {
  if (nodes_.size() != o.nodes_.size()) return false;
  // Both trees keep preorder layout only if built through the public
  // factories, so compare structurally to be safe.
  std::function<bool(int, int)> eq = [&](int a, int b) {
    for (int s = 0; s < 3; ++s) {
      int ca = nodes_[a].child[s], cb = o.nodes_[b].child[s];
      if ((ca < 0) != (cb < 0)) return false;
      if (ca >= 0 && !eq(ca, cb)) return false;
    }
    return true;
  };
  return empty() || eq(0, 0);
}

std::string tree_code(const TernaryTree& t) {
  std::string out;
  std::function<void(int)> emit = [&](int n) {
    if (n < 0) {
      out += '.';
      return;
    }
    out += '(';
    for (int s = 0; s < 3; ++s) emit(t.nodes()[n].child[s]);
    out += ')';
  };
  emit(t.root());
  return out;
}

TernaryTree parse_tree(const std::string& code) {
  TernaryTree t;
  size_t pos = 0;
  std::function<int()> rec = [&]() -> int {
    if (pos >= code.size())
      fail(ErrorKind::ParseError,
           "tree code truncated at position " + std::to_string(pos));
    char c = code[pos];
    if (c == '.') {
      ++pos;
      return -1;
    }
    if (c != '(')
      fail(ErrorKind::ParseError, std::string("expected '(' or '.' at position ") +
                                      std::to_string(pos) + ", found '" + c + "'");
    ++pos;
    int idx = static_cast<int>(t.nodes_.size());
    t.nodes_.push_back(TreeNode{});
    for (int s = 0; s < 3; ++s) t.nodes_[idx].child[s] = rec();
    if (pos >= code.size() || code[pos] != ')')
      fail(ErrorKind::ParseError,
           "expected ')' at position " + std::to_string(pos));
    ++pos;
    return idx;
  };
  rec();
  if (pos != code.size())
    fail(ErrorKind::ParseError,
         "trailing characters at position " + std::to_string(pos));
  return t;
}

std::string tree_json(const TernaryTree& t) {
  std::function<std::string(int)> emit = [&](int n) -> std::string {
    if (n < 0) return "null";
    std::string out = "{\"left\":";
    out += emit(t.nodes()[n].child[0]);
    out += ",\"middle\":";
    out += emit(t.nodes()[n].child[1]);
    out += ",\"right\":";
    out += emit(t.nodes()[n].child[2]);
    out += "}";
    return out;
  };
  return emit(t.root());
}

std::vector<int> abscissas(const TernaryTree& t) {
  std::vector<int> a(t.node_count(), 0);
  std::function<void(int, int)> rec = [&](int n, int x) {
    a[n] = x;
    static const int delta[3] = {+1, 0, -1};
    for (int s = 0; s < 3; ++s) {
      int c = t.nodes()[n].child[s];
      if (c >= 0) rec(c, x + delta[s]);
    }
  };
  if (!t.empty()) rec(0, 0);
  return a;
}

bool is_left_tree(const TernaryTree& t) {
  return first_negative_abscissa_node(t) < 0;
}

int first_negative_abscissa_node(const TernaryTree& t) {
  std::vector<int> a = abscissas(t);
  for (int i = 0; i < t.node_count(); ++i)
    if (a[i] < 0) return i;
  return -1;
}

std::string node_path(const TernaryTree& t, int node) {
  std::string path;
  std::function<bool(int)> rec = [&](int n) {
    if (n == node) return true;
    static const char letter[3] = {'L', 'M', 'R'};
    for (int s = 0; s < 3; ++s) {
      int c = t.nodes()[n].child[s];
      if (c < 0) continue;
      path += letter[s];
      if (rec(c)) return true;
      path.pop_back();
    }
    return false;
  };
  if (t.empty() || !rec(0)) return "?";
  return path;
}

int count_odd_abscissa(const TernaryTree& t) {
  int k = 0;
  for (int a : abscissas(t))
    if (a % 2 != 0) ++k;
  return k;
}

int count_even_abscissa(const TernaryTree& t) {
  return t.node_count() - count_odd_abscissa(t);
}

int count_zero_abscissa(const TernaryTree& t) {
  int k = 0;
  for (int a : abscissas(t))
    if (a == 0) ++k;
  return k;
}

int core_size(const TernaryTree& t) {
  std::function<int(int)> rec = [&](int n) -> int {
    if (n < 0) return 0;
    return 1 + rec(t.nodes()[n].child[0]) + rec(t.nodes()[n].child[1]);
  };
  return rec(t.root());
}

int count_right_branches(const TernaryTree& t) {
  // A right branch is a maximal chain of consecutive right edges, so a right
  // edge opens a new branch only when its upper node was not itself reached
  // by a right edge.
  int k = 0;
  std::vector<int> stack{t.root()};
  std::vector<bool> via_right(t.nodes().size(), false);
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (u < 0) continue;
    const TreeNode& n = t.nodes()[u];
    if (n.child[2] >= 0) {
      if (!via_right[u]) ++k;
      via_right[n.child[2]] = true;
    }
    for (int c : n.child) stack.push_back(c);
  }
  return k;
}

// --- Stem trees --------------------------------------------------------------

Dir opposite(Dir d) {
  switch (d) {
    case Dir::N: return Dir::S;
    case Dir::S: return Dir::N;
    case Dir::E: return Dir::W;
    case Dir::W: return Dir::E;
  }
  return Dir::N;
}

char dir_letter(Dir d) {
  static const char letters[4] = {'N', 'E', 'S', 'W'};
  return letters[static_cast<int>(d)];
}

void StemTree::validate() const {
  if (empty()) return;
  // Ordinary stem trees are rooted at the topmost stem cell of a descending
  // strip: label E, no W child.  The tails and symmetric constructions root
  // at an attached cell or branch cell instead: label S, any sides.
  Dir root_label = nodes[0].label;
  if (root_label != Dir::E && root_label != Dir::S)
    fail(ErrorKind::InconsistentLabels, "root must be labeled E or S");
  std::vector<int> seen(nodes.size(), 0);
  seen[0] = 1;
  int reached = 1;
  std::vector<int> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    const StemNode& nu = nodes[u];
    for (int d = 0; d < 4; ++d) {
      int v = nu.child[d];
      if (v < 0) continue;
      if (v >= static_cast<int>(nodes.size()) || seen[v])
        fail(ErrorKind::InconsistentLabels, "stem tree is not a tree");
      if (nodes[v].label != static_cast<Dir>(d))
        fail(ErrorKind::InconsistentLabels,
             "child label disagrees with its direction key");
      if (u != 0 && static_cast<Dir>(d) == opposite(nu.label))
        fail(ErrorKind::InconsistentLabels,
             "child on the parent-facing side");
      if (u == 0 && root_label == Dir::E && static_cast<Dir>(d) == Dir::W)
        fail(ErrorKind::InconsistentLabels, "E root cannot have a W child");
      seen[v] = 1;
      ++reached;
      queue.push_back(v);
    }
  }
  if (reached != static_cast<int>(nodes.size()))
    fail(ErrorKind::InconsistentLabels, "unreachable stem nodes");
}

std::vector<Dir> label_tree(const TernaryTree& t, Dir root_label) {
  std::vector<Dir> lab(t.node_count(), Dir::E);
  std::function<void(int, Dir)> rec = [&](int n, Dir L) {
    lab[n] = L;
    bool ew = (L == Dir::E || L == Dir::W);
    Dir for_slot[3] = {ew ? Dir::N : Dir::E, L, ew ? Dir::S : Dir::W};
    for (int s = 0; s < 3; ++s) {
      int c = t.nodes()[n].child[s];
      if (c >= 0) rec(c, for_slot[s]);
    }
  };
  if (!t.empty()) rec(0, root_label);
  return lab;
}

StemTree to_stem_tree(const TernaryTree& t, Dir root_label,
                      bool generalized_root) {
  StemTree s;
  s.generalized_root = generalized_root;
  if (t.empty()) return s;
  std::vector<Dir> lab = label_tree(t, root_label);
  s.nodes.resize(t.node_count());
  for (int i = 0; i < t.node_count(); ++i) {
    s.nodes[i].label = lab[i];
    for (int slot = 0; slot < 3; ++slot) {
      int c = t.nodes()[i].child[slot];
      if (c < 0) continue;
      int d = static_cast<int>(lab[c]);
      if (s.nodes[i].child[d] >= 0)
        fail(ErrorKind::Internal, "duplicate child direction in labeling");
      s.nodes[i].child[d] = c;
    }
  }
  s.validate();
  return s;
}

TernaryTree order_children(const StemTree& s) {
  if (s.empty()) return TernaryTree();
  s.validate();
  // Slot of a child labeled `c` under a parent labeled `w`.
  auto slot_of = [](Dir w, Dir c) -> int {
    bool ew = (w == Dir::E || w == Dir::W);
    Dir left = ew ? Dir::N : Dir::E;
    Dir right = ew ? Dir::S : Dir::W;
    if (c == left) return 0;
    if (c == w) return 1;
    if (c == right) return 2;
    return -1;
  };
  std::function<TernaryTree(int)> rec = [&](int u) -> TernaryTree {
    const StemNode& nu = s.nodes[u];
    TernaryTree slots[3];
    for (int d = 0; d < 4; ++d) {
      int v = nu.child[d];
      if (v < 0) continue;
      int slot = slot_of(nu.label, s.nodes[v].label);
      if (slot < 0)
        fail(ErrorKind::InconsistentLabels,
             std::string("no slot for child labeled ") +
                 dir_letter(s.nodes[v].label) + " under parent labeled " +
                 dir_letter(nu.label));
      slots[slot] = rec(v);
    }
    return TernaryTree::node(slots[0], slots[1], slots[2]);
  };
  return rec(0);
}

StemTree mirror_labels(const StemTree& s) {
  auto swap_dir = [](Dir d) {
    switch (d) {
      case Dir::S: return Dir::W;
      case Dir::W: return Dir::S;
      case Dir::E: return Dir::N;
      case Dir::N: return Dir::E;
    }
    return d;
  };
  StemTree out;
  out.generalized_root = s.generalized_root;
  out.nodes.resize(s.nodes.size());
  for (size_t i = 0; i < s.nodes.size(); ++i) {
    out.nodes[i].label = swap_dir(s.nodes[i].label);
    for (int d = 0; d < 4; ++d) {
      int v = s.nodes[i].child[d];
      if (v >= 0)
        out.nodes[i].child[static_cast<int>(swap_dir(static_cast<Dir>(d)))] = v;
    }
  }
  return out;
}

}  // namespace fishbij
