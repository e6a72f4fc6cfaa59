#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "fishbij.h"

namespace {

// Takes ownership of a C string result and frees it on scope exit.
struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { fishbij_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct OwnedFish {
  fishbij_fish* f = nullptr;
  ~OwnedFish() { fishbij_fish_free(f); }
};

struct OwnedTree {
  fishbij_tree* t = nullptr;
  ~OwnedTree() { fishbij_tree_free(t); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(fishbij_version()) == "1.0.0");
  CHECK(std::string(fishbij_status_name(FISHBIJ_OK)) == "ok");
  CHECK(std::string(fishbij_status_name(FISHBIJ_E_PARSE)) == "parse-error");
  CHECK(std::string(fishbij_status_name(FISHBIJ_E_NOT_LEFT_TREE)) ==
        "not-left-tree");
}

TEST_CASE("fish handles round-trip through json") {
  OwnedFish head;
  REQUIRE(fishbij_head_fish(&head.f) == FISHBIJ_OK);
  OwnedString json;
  REQUIRE(fishbij_fish_json(head.f, &json.s) == FISHBIJ_OK);
  CHECK(json.str() ==
        "{\"cells\":[{\"ru\":null,\"rl\":null,\"lu\":null,\"ll\":null}]}");

  OwnedFish parsed;
  REQUIRE(fishbij_fish_parse(json.s, &parsed.f) == FISHBIJ_OK);
  int eq = 0;
  REQUIRE(fishbij_fish_equal(head.f, parsed.f, &eq) == FISHBIJ_OK);
  CHECK(eq == 1);

  int size = 0, cells = 0;
  REQUIRE(fishbij_fish_size(head.f, &size) == FISHBIJ_OK);
  REQUIRE(fishbij_fish_cell_count(head.f, &cells) == FISHBIJ_OK);
  CHECK(size == 1);
  CHECK(cells == 1);
}

TEST_CASE("gluing, conjugation and statistics") {
  OwnedFish head, vdom, hdom, diamond;
  REQUIRE(fishbij_head_fish(&head.f) == FISHBIJ_OK);
  REQUIRE(fishbij_glue_upper(head.f, 0, &vdom.f) == FISHBIJ_OK);
  REQUIRE(fishbij_glue_lower(vdom.f, 0, &hdom.f) == FISHBIJ_OK);
  REQUIRE(fishbij_glue_double(hdom.f, 1, 2, &diamond.f) == FISHBIJ_OK);

  int size = 0, cells = 0;
  REQUIRE(fishbij_fish_size(diamond.f, &size) == FISHBIJ_OK);
  REQUIRE(fishbij_fish_cell_count(diamond.f, &cells) == FISHBIJ_OK);
  CHECK(size == 3);
  CHECK(cells == 4);
  long long fin = 0;
  REQUIRE(fishbij_fish_statistic(diamond.f, "finCells", &fin) == FISHBIJ_OK);
  CHECK(fin == 3);

  OwnedFish conj;
  REQUIRE(fishbij_conjugate(diamond.f, &conj.f) == FISHBIJ_OK);
  int eq = 0, sym = 0;
  REQUIRE(fishbij_fish_equal(diamond.f, conj.f, &eq) == FISHBIJ_OK);
  REQUIRE(fishbij_is_symmetric(diamond.f, &sym) == FISHBIJ_OK);
  CHECK(eq == 1);
  CHECK(sym == 1);

  CHECK(fishbij_glue_upper(diamond.f, 0, &conj.f) == FISHBIJ_E_EDGE_OCCUPIED);
  CHECK(fishbij_glue_upper(diamond.f, 9, &conj.f) == FISHBIJ_E_BAD_CELL);
}

TEST_CASE("tree handles") {
  OwnedTree t;
  REQUIRE(fishbij_tree_parse("((...).(...))", &t.t) == FISHBIJ_OK);
  OwnedString code;
  REQUIRE(fishbij_tree_code(t.t, &code.s) == FISHBIJ_OK);
  CHECK(code.str() == "((...).(...))");
  int nodes = 0;
  REQUIRE(fishbij_tree_nodes(t.t, &nodes) == FISHBIJ_OK);
  CHECK(nodes == 3);
  long long odd = 0;
  REQUIRE(fishbij_tree_statistic(t.t, "oddAbscissa", &odd) == FISHBIJ_OK);
  CHECK(odd == 2);
  OwnedString json;
  REQUIRE(fishbij_tree_json(t.t, &json.s) == FISHBIJ_OK);
  CHECK(json.str().find("\"middle\"") != std::string::npos);

  OwnedTree empty;
  REQUIRE(fishbij_tree_parse(".", &empty.t) == FISHBIJ_OK);
  REQUIRE(fishbij_tree_nodes(empty.t, &nodes) == FISHBIJ_OK);
  CHECK(nodes == 0);

  OwnedTree bad;
  CHECK(fishbij_tree_parse("((..)", &bad.t) == FISHBIJ_E_PARSE);
  CHECK(std::strlen(fishbij_last_error()) > 0);
}

TEST_CASE("bijections across the boundary") {
  OwnedTree leaf;
  REQUIRE(fishbij_tree_parse("(...)", &leaf.t) == FISHBIJ_OK);
  OwnedFish f;
  REQUIRE(fishbij_map_tree_to_fish(leaf.t, &f.f) == FISHBIJ_OK);
  OwnedTree back;
  REQUIRE(fishbij_map_fish_to_tree(f.f, &back.t) == FISHBIJ_OK);
  OwnedString code;
  REQUIRE(fishbij_tree_code(back.t, &code.s) == FISHBIJ_OK);
  CHECK(code.str() == "(...)");

  OwnedTree skewed;
  REQUIRE(fishbij_tree_parse("(..(...))", &skewed.t) == FISHBIJ_OK);
  OwnedFish reject;
  CHECK(fishbij_map_tree_to_fish(skewed.t, &reject.f) ==
        FISHBIJ_E_NOT_LEFT_TREE);
  CHECK(std::strlen(fishbij_last_error()) > 0);

  OwnedFish marked;
  int strip = -1;
  REQUIRE(fishbij_map_tree_to_marked(skewed.t, &marked.f, &strip) ==
          FISHBIJ_OK);
  OwnedTree unmarked;
  REQUIRE(fishbij_map_marked_to_tree(marked.f, strip, &unmarked.t) ==
          FISHBIJ_OK);
  OwnedString code2;
  REQUIRE(fishbij_tree_code(unmarked.t, &code2.s) == FISHBIJ_OK);
  CHECK(code2.str() == "(..(...))");

  OwnedTree first, second;
  REQUIRE(fishbij_map_tails_to_pair(marked.f, 1, &first.t, &second.t) ==
          FISHBIJ_OK);
  OwnedFish refish;
  int tail = -1;
  REQUIRE(fishbij_map_pair_to_fish(first.t, second.t, &refish.f, &tail) ==
          FISHBIJ_OK);
  int eq = 0;
  REQUIRE(fishbij_fish_equal(marked.f, refish.f, &eq) == FISHBIJ_OK);
  CHECK(eq == 1);
  CHECK(tail == 1);

  OwnedFish sym;
  REQUIRE(fishbij_map_pair_to_symmetric(first.t, second.t, &sym.f) ==
          FISHBIJ_OK);
  OwnedTree sf, ss;
  REQUIRE(fishbij_map_symmetric_to_pair(sym.f, &sf.t, &ss.t) == FISHBIJ_OK);
  OwnedString ca, cb, cc, cd;
  REQUIRE(fishbij_tree_code(first.t, &ca.s) == FISHBIJ_OK);
  REQUIRE(fishbij_tree_code(sf.t, &cb.s) == FISHBIJ_OK);
  REQUIRE(fishbij_tree_code(second.t, &cc.s) == FISHBIJ_OK);
  REQUIRE(fishbij_tree_code(ss.t, &cd.s) == FISHBIJ_OK);
  CHECK(ca.str() == cb.str());
  CHECK(cc.str() == cd.str());
}

TEST_CASE("counts, polynomials, censuses") {
  OwnedString count;
  REQUIRE(fishbij_count("fish", 5, &count.s) == FISHBIJ_OK);
  CHECK(count.str() == "91");
  OwnedString pairs;
  REQUIRE(fishbij_count("pairs", 4, &pairs.s) == FISHBIJ_OK);
  CHECK(pairs.str() == "143");
  OwnedString bad;
  CHECK(fishbij_count("gerbils", 3, &bad.s) == FISHBIJ_E_RANGE);
  CHECK(fishbij_count("fish", 0, &bad.s) == FISHBIJ_E_RANGE);

  OwnedString poly;
  REQUIRE(fishbij_g_polynomial(2, &poly.s) == FISHBIJ_OK);
  CHECK(poly.str() == "1 0 0 1");

  const char* stats[] = {"tails"};
  OwnedString csv;
  REQUIRE(fishbij_census_csv("fish", 2, stats, 1, "via-left-trees", 1,
                             &csv.s) == FISHBIJ_OK);
  CHECK(csv.str() == "tails,count\n1,2\n");
  const char* bogus[] = {"bogus"};
  CHECK(fishbij_census_csv("fish", 2, bogus, 1, "via-left-trees", 1, &csv.s) ==
        FISHBIJ_E_UNKNOWN_STATISTIC);
}

TEST_CASE("verification and the census comparison") {
  int pass = 0;
  OwnedString report;
  REQUIRE(fishbij_verify("lemma2", 3, 1, &pass, &report.s) == FISHBIJ_OK);
  CHECK(pass == 1);
  CHECK(report.str().find("PASS") != std::string::npos);
  CHECK(fishbij_verify("nonsense", 3, 1, &pass, &report.s) == FISHBIJ_E_RANGE);

  int corrected = 0, raw = 0;
  OwnedString diff;
  REQUIRE(fishbij_conjecture(2, 1, &corrected, &raw, &diff.s) == FISHBIJ_OK);
  CHECK(corrected == 1);
  CHECK(diff.str().find("EQUAL") != std::string::npos);
}

TEST_CASE("svg rendering") {
  OwnedFish head;
  REQUIRE(fishbij_head_fish(&head.f) == FISHBIJ_OK);
  OwnedString svg;
  REQUIRE(fishbij_render_fish_svg(head.f, &svg.s) == FISHBIJ_OK);
  CHECK(svg.str().rfind("<svg", 0) == 0);

  OwnedTree t;
  REQUIRE(fishbij_tree_parse("(...)", &t.t) == FISHBIJ_OK);
  OwnedString tsvg;
  REQUIRE(fishbij_render_tree_svg(t.t, &tsvg.s) == FISHBIJ_OK);
  CHECK(tsvg.str().rfind("<svg", 0) == 0);
}

TEST_CASE("null arguments are rejected without crashing") {
  CHECK(fishbij_head_fish(nullptr) == FISHBIJ_E_RANGE);
  CHECK(fishbij_fish_parse(nullptr, nullptr) == FISHBIJ_E_RANGE);
  OwnedFish f;
  CHECK(fishbij_fish_json(nullptr, nullptr) == FISHBIJ_E_RANGE);
  CHECK(std::string(fishbij_last_error()).find("null argument") !=
        std::string::npos);
  CHECK(fishbij_fish_parse("{\"cells\":0}", &f.f) == FISHBIJ_E_PARSE);
  fishbij_fish_free(nullptr);
  fishbij_tree_free(nullptr);
  fishbij_string_free(nullptr);
}
