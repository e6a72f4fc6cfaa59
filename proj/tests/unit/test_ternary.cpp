#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fishbij/enumerate.hpp"
#include "fishbij/ternary.hpp"

using namespace fishbij;

// The 11-node tree used across the worked examples: root w with left a,
// middle b, right k; a has left c, middle d, right e; c has right f; f has
// middle g and right h; e has right j.
static const char* kBigTreeCode =
    "(((..(.(...)(...)))(...)(..(...)))(...)(...))";

TEST_CASE("tree codes round trip") {
  CHECK(tree_code(TernaryTree()) == ".");
  CHECK(tree_code(TernaryTree::leaf()) == "(...)");
  for (const char* code :
       {".", "(...)", "((...)..)", "(.(...).)", "(..(...))", kBigTreeCode}) {
    CHECK(tree_code(parse_tree(code)) == code);
  }
}

TEST_CASE("tree parse errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_tree("(..)"), "expected '(' or '.' at position 3, found ')'",
                       Error);
  CHECK_THROWS_AS(parse_tree(""), Error);
  CHECK_THROWS_AS(parse_tree("(..."), Error);
  CHECK_THROWS_AS(parse_tree("(...))"), Error);
  CHECK_THROWS_AS(parse_tree("(....)"), Error);
  try {
    parse_tree("x");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}

TEST_CASE("tree equality is structural") {
  TernaryTree a = parse_tree("((...)(...).)");
  TernaryTree b = TernaryTree::node(TernaryTree::leaf(), TernaryTree::leaf(),
                                    TernaryTree());
  CHECK(a == b);
  CHECK(a != parse_tree("((...).(...))"));
  CHECK(TernaryTree() == parse_tree("."));
}

TEST_CASE("subtree extraction") {
  TernaryTree t = parse_tree(kBigTreeCode);
  CHECK(tree_code(t.subtree(t.child(0, Slot::Left))) ==
        "((..(.(...)(...)))(...)(..(...)))");
  CHECK(t.subtree(-1).empty());
}

TEST_CASE("abscissas and parity counts") {
  TernaryTree t = parse_tree(kBigTreeCode);
  std::vector<int> a = abscissas(t);
  std::vector<int> expected = {0, 1, 2, 1, 1, 0, 1, 0, -1, 0, -1};
  CHECK(a == expected);
  CHECK(count_odd_abscissa(t) == 6);
  CHECK(count_even_abscissa(t) == 5);
  CHECK(count_zero_abscissa(t) == 4);
  CHECK_FALSE(is_left_tree(t));
  CHECK(abscissas(parse_tree("(..(...))")) == std::vector<int>{0, -1});
  CHECK(is_left_tree(parse_tree("((...)..)")));
  CHECK(is_left_tree(TernaryTree()));
}

TEST_CASE("violating node reporting") {
  TernaryTree t = parse_tree("(..(...))");
  int bad = first_negative_abscissa_node(t);
  CHECK(bad == 1);
  CHECK(node_path(t, bad) == "R");
  CHECK(first_negative_abscissa_node(parse_tree("((...)..)")) == -1);
}

TEST_CASE("core size and right branches") {
  CHECK(core_size(TernaryTree()) == 0);
  CHECK(core_size(TernaryTree::leaf()) == 1);
  CHECK(core_size(parse_tree(kBigTreeCode)) == 5);
  // Five right edges, but two of the pairs are consecutive: three maximal
  // right-edge chains.
  CHECK(count_right_branches(parse_tree(kBigTreeCode)) == 3);
  // Left comb: everything in the core.
  CHECK(core_size(parse_tree("((((...)..)..)..)")) == 4);
  CHECK(count_right_branches(parse_tree("((((...)..)..)..)")) == 0);
  CHECK(count_right_branches(parse_tree("(..(...))")) == 1);
  // The L-L-R-R chain: two consecutive right edges form one branch.
  CHECK(count_right_branches(parse_tree("(((..(..(...)))..)..)")) == 1);
}

TEST_CASE("node labeling follows the direction rules") {
  TernaryTree t = parse_tree(kBigTreeCode);
  std::vector<Dir> lab = label_tree(t);
  using D = Dir;
  // Preorder: w a c f g h d e j b k.
  std::vector<Dir> expected = {D::E, D::N, D::E, D::S, D::S, D::W,
                               D::N, D::W, D::S, D::E, D::S};
  CHECK(lab == expected);
}

TEST_CASE("label parity matches abscissa parity") {
  for (int n = 1; n <= 5; ++n) {
    for_each_ternary(n, [](const TernaryTree& t) {
      std::vector<Dir> lab = label_tree(t);
      std::vector<int> a = abscissas(t);
      for (int i = 0; i < t.node_count(); ++i) {
        bool ew = (lab[i] == Dir::E || lab[i] == Dir::W);
        CHECK(ew == (a[i] % 2 == 0));
      }
      // Middle children inherit labels; left/right depend only on parity.
      for (int i = 0; i < t.node_count(); ++i) {
        bool ew = (lab[i] == Dir::E || lab[i] == Dir::W);
        int l = t.child(i, Slot::Left), m = t.child(i, Slot::Middle),
            r = t.child(i, Slot::Right);
        if (m >= 0) CHECK(lab[m] == lab[i]);
        if (l >= 0) CHECK(lab[l] == (ew ? Dir::N : Dir::E));
        if (r >= 0) CHECK(lab[r] == (ew ? Dir::S : Dir::W));
      }
    });
  }
}

TEST_CASE("ordering children inverts labeling") {
  for (int n = 0; n <= 5; ++n) {
    for_each_ternary(n, [](const TernaryTree& t) {
      CHECK(order_children(to_stem_tree(t)) == t);
    });
  }
}

TEST_CASE("stem tree validation rejects bad shapes") {
  // Root labeled E with a W child.
  StemTree s;
  s.nodes.resize(2);
  s.nodes[0].label = Dir::E;
  s.nodes[0].child[static_cast<int>(Dir::W)] = 1;
  s.nodes[1].label = Dir::W;
  CHECK_THROWS_AS(s.validate(), Error);

  // Child keyed under a direction that disagrees with its label.
  StemTree s2;
  s2.nodes.resize(2);
  s2.nodes[0].label = Dir::E;
  s2.nodes[0].child[static_cast<int>(Dir::N)] = 1;
  s2.nodes[1].label = Dir::S;
  CHECK_THROWS_AS(s2.validate(), Error);

  // Child hung on the side facing its parent.
  StemTree s3;
  s3.nodes.resize(3);
  s3.nodes[0].label = Dir::E;
  s3.nodes[0].child[static_cast<int>(Dir::N)] = 1;
  s3.nodes[1].label = Dir::N;
  s3.nodes[1].child[static_cast<int>(Dir::S)] = 2;
  s3.nodes[2].label = Dir::S;
  CHECK_THROWS_AS(s3.validate(), Error);
}

TEST_CASE("mirroring labels is an involution") {
  for_each_ternary(4, [](const TernaryTree& t) {
    StemTree s = to_stem_tree(t, Dir::S);
    StemTree m = mirror_labels(mirror_labels(s));
    CHECK(m.nodes.size() == s.nodes.size());
    for (size_t i = 0; i < s.nodes.size(); ++i) {
      CHECK(m.nodes[i].label == s.nodes[i].label);
      for (int d = 0; d < 4; ++d) CHECK(m.nodes[i].child[d] == s.nodes[i].child[d]);
    }
  });
}

TEST_CASE("tree json export") {
  CHECK(tree_json(TernaryTree()) == "null");
  CHECK(tree_json(parse_tree("(.(...).)")) ==
        "{\"left\":null,\"middle\":{\"left\":null,\"middle\":null,"
        "\"right\":null},\"right\":null}");
}
