#include <functional>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fishbij/bijection.hpp"
#include "fishbij/enumerate.hpp"
#include "fishbij/fish.hpp"
#include "fishbij/ternary.hpp"

using namespace fishbij;

namespace {

// Same 11-node worked example as in the ternary tests.
const char* kBigTreeCode = "(((..(.(...)(...)))(...)(..(...)))(...)(...))";

Fish diamond() {
  Fish f = glue_lower(glue_upper(Fish::head_fish(), 0), 0);
  return glue_double(f, 1, 2);
}

// Head with both right edges glued; its two children are tails.
Fish arrow() { return glue_lower(glue_upper(Fish::head_fish(), 0), 0); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("phi on the single node and the empty tree") {
  MarkedFish m = phi(TernaryTree::leaf());
  CHECK(m.fish == Fish::head_fish());
  CHECK(m.strip == 0);
  CHECK(phi_inv(m) == TernaryTree::leaf());
  CHECK(kind_of([] { phi(TernaryTree()); }) == ErrorKind::EmptyTree);
}

TEST_CASE("the worked 11-node example maps to the 11-strip fish") {
  TernaryTree t = parse_tree(kBigTreeCode);
  MarkedFish m = phi(t);
  CHECK(m.fish.size() == 11);
  CHECK(stem_cells(m.fish).size() == 11);
  // 6 odd and 5 even abscissas give 7 descending and 5 ascending strips.
  CHECK(strips(m.fish, Orientation::Descending).size() == 7);
  CHECK(strips(m.fish, Orientation::Ascending).size() == 5);
  CHECK(phi_inv(m) == t);
}

TEST_CASE("re-rooting at every descending strip") {
  TernaryTree t = parse_tree(kBigTreeCode);
  MarkedFish m = phi(t);
  int desc = static_cast<int>(strips(m.fish, Orientation::Descending).size());
  std::set<std::string> seen;
  for (int q = 0; q < desc; ++q) {
    TernaryTree tq = phi_inv({m.fish, q});
    CHECK(tq.node_count() == 11);
    seen.insert(tree_code(tq));
    MarkedFish back = phi(tq);
    CHECK(back.fish == m.fish);
    CHECK(back.strip == q);
  }
  CHECK(static_cast<int>(seen.size()) == desc);
}

TEST_CASE("strip marks are validated") {
  MarkedFish bad{diamond(), 5};
  CHECK(kind_of([&] { bad.strip_ref(); }) == ErrorKind::BadStripIndex);
  CHECK(kind_of([&] { phi_inv(bad); }) == ErrorKind::BadStripIndex);
}

TEST_CASE("jaw-rooted bijection on small fish") {
  CHECK(phi_left(TernaryTree::leaf()) == Fish::head_fish());
  CHECK(phi_left_inv(Fish::head_fish()) == TernaryTree::leaf());
  // The diamond's stem tree hangs one cell north of the jaw root and one
  // west of that; rebuilding inserts a two-cell ascending strip.
  CHECK(phi_left_inv(diamond()) == parse_tree("((..(...))..)"));
  CHECK(phi_left(parse_tree("((..(...))..)")) == diamond());
}

TEST_CASE("non-left trees are rejected with the violating node") {
  try {
    phi_left(parse_tree("(..(...))"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotLeftTree);
    CHECK(std::string(e.what()).find("R") != std::string::npos);
  }
  CHECK(kind_of([] { phi_left(TernaryTree()); }) == ErrorKind::EmptyTree);
}

TEST_CASE("jaw-rooted bijection round-trips exhaustively") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> codes;
    for_each_left(n, [&](const TernaryTree& t) {
      Fish f = phi_left(t);
      CHECK(phi_left_inv(f) == t);
      codes.insert(f.code());
      CHECK(jaw(f).cells.size() ==
            static_cast<size_t>(count_zero_abscissa(t)));
    });
    CHECK(BigCount(codes.size()) == count_left(n));
  }
}

TEST_CASE("building is independent of sibling order") {
  // Reversed processing order for every node against the default order.
  for_each_ternary(4, [](const TernaryTree& t) {
    StemTree s = to_stem_tree(t);
    BuildResult a = build_fish(s);
    std::vector<std::vector<Dir>> reversed(
        s.nodes.size(), {Dir::W, Dir::S, Dir::E, Dir::N});
    BuildResult b = build_fish_ordered(s, reversed);
    CHECK(a.fish == b.fish);
    CHECK(a.cell_of_node == b.cell_of_node);
  });
}

TEST_CASE("explicit sibling orders must cover each child once") {
  StemTree s = to_stem_tree(parse_tree("((...)(...)(...))"));
  std::vector<std::vector<Dir>> dup(s.nodes.size(),
                                    {Dir::N, Dir::N, Dir::E, Dir::S, Dir::W});
  CHECK(kind_of([&] { build_fish_ordered(s, dup); }) == ErrorKind::Range);
  std::vector<std::vector<Dir>> missing(s.nodes.size(), {Dir::N});
  CHECK(kind_of([&] { build_fish_ordered(s, missing); }) == ErrorKind::Range);
  CHECK(kind_of([] { build_fish(StemTree{}); }) == ErrorKind::EmptyTree);
}

TEST_CASE("tail bijection on the smallest fish") {
  TreePair p = tails_to_pair(Fish::head_fish(), 0);
  CHECK(p.first.empty());
  CHECK(p.second.empty());
  TailedFish back = pair_to_tailed_fish(p);
  CHECK(back.fish == Fish::head_fish());
  CHECK(back.tail == 0);

  Fish v = glue_upper(Fish::head_fish(), 0);
  TreePair pv = tails_to_pair(v, 1);
  CHECK(tree_code(pv.first) == "(...)");
  CHECK(pv.second.empty());

  Fish h = glue_lower(Fish::head_fish(), 0);
  TreePair ph = tails_to_pair(h, 1);
  CHECK(ph.first.empty());
  CHECK(tree_code(ph.second) == "(...)");

  // Conjugation carries (v, tail 1) to (h, tail 1) and swaps the pair.
  std::vector<CellId> map;
  CHECK(conjugate_mapped(v, &map) == h);
  CHECK(map[1] == 1);

  TreePair pd = tails_to_pair(diamond(), 3);
  CHECK(tree_code(pd.first) == "(...)");
  CHECK(tree_code(pd.second) == "(...)");
  TailedFish backd = pair_to_tailed_fish(pd);
  CHECK(backd.fish == diamond());
  CHECK(backd.tail == 3);

  CHECK(kind_of([] { tails_to_pair(Fish::head_fish(), 5); }) ==
        ErrorKind::BadCell);
  CHECK(kind_of([&] { tails_to_pair(diamond(), 0); }) == ErrorKind::NotATail);
}

TEST_CASE("tail bijection round-trips exhaustively") {
  for (int n = 1; n <= 4; ++n) {
    long long pairs = 0;
    for_each_fish(n, FishGenMethod::ViaLeftTrees, [&](const Fish& f) {
      for (CellId t : tails(f)) {
        ++pairs;
        TreePair p = tails_to_pair(f, t);
        CHECK(p.first.node_count() + p.second.node_count() == n - 1);
        TailedFish back = pair_to_tailed_fish(p);
        CHECK(back.fish == f);
        CHECK(back.tail == t);
      }
    });
    CHECK(BigCount(pairs) == count_pairs(n - 1));
  }
}

TEST_CASE("symmetric bijection on the smallest fish") {
  TreePair p0 = symmetric_to_pair(Fish::head_fish());
  CHECK(p0.first.empty());
  CHECK(p0.second.empty());
  CHECK(pair_to_symmetric(p0) == Fish::head_fish());

  // Arrow: two tails, terminal branch cell; pair (empty, leaf).
  TreePair pa = symmetric_to_pair(arrow());
  CHECK(pa.first.empty());
  CHECK(tree_code(pa.second) == "(...)");
  CHECK(pair_to_symmetric(pa) == arrow());

  // Diamond: one tail; pair (leaf, empty).
  TreePair pd = symmetric_to_pair(diamond());
  CHECK(tree_code(pd.first) == "(...)");
  CHECK(pd.second.empty());
  CHECK(pair_to_symmetric(pd) == diamond());

  CHECK(kind_of([] {
          symmetric_to_pair(glue_upper(Fish::head_fish(), 0));
        }) == ErrorKind::NotSymmetric);
}

TEST_CASE("symmetric bijection round-trips exhaustively at size 5") {
  long long found = 0;
  for_each_fish(5, FishGenMethod::ViaLeftTrees, [&](const Fish& f) {
    if (!is_symmetric(f)) return;
    ++found;
    TreePair p = symmetric_to_pair(f);
    CHECK(p.first.node_count() + p.second.node_count() == 2);
    CHECK(pair_to_symmetric(p) == f);
  });
  CHECK(found == 7);
}
