#pragma once

#include <array>
#include <string>
#include <vector>

#include "fishbij/errors.hpp"

namespace fishbij {

// Ordered ternary trees.  The empty tree is a first-class value (no nodes).
// Node 0 is the root of a nonempty tree; nodes are kept in preorder so that
// equal shapes have equal node vectors.

enum class Slot { Left = 0, Middle = 1, Right = 2 };

struct TreeNode {
  int child[3] = {-1, -1, -1};  // indexed by Slot; -1 = absent
};

class TernaryTree {
 public:
  TernaryTree() = default;  // empty tree

  static TernaryTree leaf();
  // Assembles a root with the given subtrees (copies are re-laid in preorder).
  static TernaryTree node(const TernaryTree& left, const TernaryTree& middle,
                          const TernaryTree& right);

  bool empty() const { return nodes_.empty(); }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int root() const { return empty() ? -1 : 0; }
  int child(int node, Slot s) const {
    return nodes_[node].child[static_cast<int>(s)];
  }
  const std::vector<TreeNode>& nodes() const { return nodes_; }

  // Subtree rooted at `node` as a standalone tree.
  TernaryTree subtree(int node) const;

  bool operator==(const TernaryTree& o) const { return equal(o); }
  bool operator!=(const TernaryTree& o) const { return !equal(o); }

 private:
  bool equal(const TernaryTree& o) const;
  friend TernaryTree parse_tree(const std::string&);
  std::vector<TreeNode> nodes_;
};

// tree ::= "." | "(" tree tree tree ")"
std::string tree_code(const TernaryTree& t);
TernaryTree parse_tree(const std::string& code);  // ParseError with position

// {"left":...,"middle":...,"right":...} with null for absent subtrees;
// the empty tree serializes as null.
std::string tree_json(const TernaryTree& t);

// Abscissa: root 0, left child +1, middle +0, right -1.  Values per node id.
std::vector<int> abscissas(const TernaryTree& t);

bool is_left_tree(const TernaryTree& t);  // all abscissas >= 0
// First node (preorder) with negative abscissa; -1 if none.
int first_negative_abscissa_node(const TernaryTree& t);
// Root-to-node slot path like "LMR" (empty string for the root).
std::string node_path(const TernaryTree& t, int node);

int count_odd_abscissa(const TernaryTree& t);
int count_even_abscissa(const TernaryTree& t);
int count_zero_abscissa(const TernaryTree& t);

// Core: the maximal subtree containing the root whose edges are all left or
// middle edges.  Size 0 for the empty tree.
int core_size(const TernaryTree& t);
int count_right_branches(const TernaryTree& t);  // maximal right-edge chains

// --- Stem-cell tree machinery -----------------------------------------------
//
// Stem cells of a fish get labels in {N,E,S,W}; a node's children hang on the
// sides named by their labels, so a stem tree is direction-keyed rather than
// slot-ordered.

enum class Dir { N = 0, E = 1, S = 2, W = 3 };

Dir opposite(Dir d);
char dir_letter(Dir d);

struct StemNode {
  Dir label = Dir::E;
  int child[4] = {-1, -1, -1, -1};  // indexed by Dir
};

// Invariant (checked by validate): for non-root nodes, no child hangs in the
// direction opposite the node's own label (that side faces the parent).  An
// ordinary root is labeled E and additionally has no W child; a generalized
// root (tails / symmetric constructions) is labeled S and may use all four
// sides.
struct StemTree {
  std::vector<StemNode> nodes;  // node 0 is the root; BFS-friendly order
  bool generalized_root = false;

  bool empty() const { return nodes.empty(); }
  void validate() const;  // throws InconsistentLabels
};

// Node labeling of an ordered ternary tree (the D-rules): the root gets
// `root_label`; a middle child inherits its parent's label; a left child gets
// N under an E/W parent and E under an N/S parent; a right child gets S under
// an E/W parent and W under an N/S parent.  Returned per node id.
std::vector<Dir> label_tree(const TernaryTree& t, Dir root_label = Dir::E);

// Labeled ordered tree -> direction-keyed stem tree (forgets sibling order).
StemTree to_stem_tree(const TernaryTree& t, Dir root_label = Dir::E,
                      bool generalized_root = false);

// Inverse of labeling (the E-rules): places each child of a node labeled w
// into the slot determined by (w, child label).  Throws InconsistentLabels if
// a child's label is not among the three admissible ones.
TernaryTree order_children(const StemTree& s);

// Mirror of a labeled subtree: swaps labels S<->W and E<->N and re-keys
// children accordingly.  Used by the symmetric-fish bijection.
StemTree mirror_labels(const StemTree& s);

}  // namespace fishbij
