#pragma once

#include <vector>

#include "fishbij/fish.hpp"
#include "fishbij/ternary.hpp"

namespace fishbij {

// Bijections between fighting fish and ternary trees, all driven by the stem
// tree: cells of the fish with labels in {N,E,S,W} and adjacency "same strip,
// no stem cell in between".

// Marked fish: a fish together with one of its descending strips, addressed
// by index in the strips(f, Descending) order.
struct MarkedFish {
  Fish fish;
  int strip = 0;

  StripRef strip_ref() const;  // BadStripIndex if out of range
};

struct TreePair {
  TernaryTree first, second;
};

// Fish -> labeled stem tree, rooted at the topmost stem cell of the marked
// descending strip (root label E).  cell_of_node, if given, receives the
// stem cell backing each tree node.
StemTree stem_tree(const Fish& f, const StripRef& q,
                   std::vector<CellId>* cell_of_node = nullptr);

// Stem tree -> fish (BFS reconstruction; sibling processing order does not
// matter).  cell_of_node receives each node's stem cell in the result.
struct BuildResult {
  Fish fish;
  std::vector<CellId> cell_of_node;
};
BuildResult build_fish(const StemTree& s);
// Test hook: processes each node's children in the order given by
// child_order(node, dirs) over the present directions.
BuildResult build_fish_ordered(
    const StemTree& s,
    const std::vector<std::vector<Dir>>& child_order_per_node);

// Ternary trees <-> marked fish (strip-marked bijection).
MarkedFish phi(const TernaryTree& t);          // EmptyTree on the empty tree
TernaryTree phi_inv(const MarkedFish& m);

// Left ternary trees <-> fish (jaw-rooted specialization).
Fish phi_left(const TernaryTree& t);           // NotLeftTree if negative abscissa
TernaryTree phi_left_inv(const Fish& f);

// Fish with a marked tail <-> pairs of ternary trees of total size n-1.
TreePair tails_to_pair(const Fish& f, CellId tail);  // NotATail
struct TailedFish {
  Fish fish;
  CellId tail;
};
TailedFish pair_to_tailed_fish(const TreePair& p);

// Symmetric fish of size 2n+1 <-> pairs of ternary trees of total size n.
// Odd tail count maps to (T, empty); even tail count to (T1, T2) with T2
// nonempty.
TreePair symmetric_to_pair(const Fish& f);     // NotSymmetric
Fish pair_to_symmetric(const TreePair& p);

}  // namespace fishbij
