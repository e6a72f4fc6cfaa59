#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "fishbij/enumerate.hpp"
#include "fishbij/fish.hpp"
#include "fishbij/ternary.hpp"

using namespace fishbij;

namespace {

const char* kBigTreeCode = "(((..(.(...)(...)))(...)(..(...)))(...)(...))";

Fish diamond() {
  Fish f = glue_lower(glue_upper(Fish::head_fish(), 0), 0);
  return glue_double(f, 1, 2);
}

std::vector<BigCount> big(std::initializer_list<long long> xs) {
  return std::vector<BigCount>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("closed-form counts match the reference sequences") {
  // A000139
  std::vector<BigCount> fish;
  for (int n = 1; n <= 9; ++n) fish.push_back(count_fish(n));
  CHECK(fish == big({1, 2, 6, 22, 91, 408, 1938, 9614, 49335}));
  // A001764
  std::vector<BigCount> trees;
  for (int n = 0; n <= 9; ++n) trees.push_back(count_ternary(n));
  CHECK(trees ==
        big({1, 1, 3, 12, 55, 273, 1428, 7752, 43263, 246675}));
  // A006013
  std::vector<BigCount> pairs;
  for (int n = 0; n <= 6; ++n) pairs.push_back(count_pairs(n));
  CHECK(pairs == big({1, 2, 7, 30, 143, 728, 3876}));
  // As many left trees as fish at every size.
  for (int n = 1; n <= 12; ++n) CHECK(count_left(n) == count_fish(n));

  CHECK_THROWS_AS(count_fish(0), Error);
  CHECK_THROWS_AS(count_ternary(-1), Error);
  CHECK_THROWS_AS(count_left(0), Error);
  CHECK_THROWS_AS(count_pairs(-1), Error);
}

TEST_CASE("symmetric-fish counts and the tail-parity split") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(count_symmetric(n) == count_pairs(n));
    CHECK(count_symmetric_odd_tails(n) + count_symmetric_even_tails(n) ==
          count_symmetric(n));
  }
  CHECK(count_symmetric_odd_tails(3) == BigCount(12));
  CHECK(count_symmetric_even_tails(3) == BigCount(18));
  CHECK(count_symmetric_of_size(1) == BigCount(1));
  CHECK(count_symmetric_of_size(7) == BigCount(30));
  CHECK(count_symmetric_of_size(4) == BigCount(0));
  CHECK(count_symmetric_odd_tails_of_size(7) == BigCount(12));
  CHECK(count_symmetric_even_tails_of_size(7) == BigCount(18));
  CHECK_THROWS_AS(count_symmetric_of_size(0), Error);
}

TEST_CASE("the refined left-tree formula partitions the total") {
  CHECK(count_left_refined(0, 0) == BigCount(1));
  CHECK(count_left_refined(1, 0) == BigCount(1));
  CHECK(count_left_refined(0, 1) == BigCount(1));
  for (int n = 1; n <= 10; ++n) {
    BigCount total = 0;
    for (int i = 0; i < n; ++i) total += count_left_refined(i, n - 1 - i);
    CHECK(total == count_left(n));
  }
  CHECK_THROWS_AS(count_left_refined(-1, 0), Error);
}

TEST_CASE("tree code enumeration") {
  CHECK(ternary_codes(0) == std::vector<std::string>{"."});
  CHECK(ternary_codes(1) == std::vector<std::string>{"(...)"});
  CHECK(ternary_codes(2) ==
        std::vector<std::string>{"((...)..)", "(.(...).)", "(..(...))"});
  for (int n = 0; n <= 5; ++n) {
    const std::vector<std::string>& codes = ternary_codes(n);
    CHECK(BigCount(codes.size()) == count_ternary(n));
    CHECK(std::is_sorted(codes.begin(), codes.end()));
  }
  long long seen = 0;
  for_each_ternary(3, [&](const TernaryTree& t) {
    ++seen;
    CHECK(t.node_count() == 3);
  });
  CHECK(seen == 12);
  seen = 0;
  for_each_left(4, [&](const TernaryTree& t) {
    ++seen;
    CHECK(is_left_tree(t));
  });
  CHECK(seen == 22);
}

TEST_CASE("both fish generators agree on small sizes") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> a = gen_fish_codes(n, FishGenMethod::ViaLeftTrees);
    std::vector<std::string> b = gen_fish_codes(n, FishGenMethod::GrowthOracle);
    CHECK(a == b);
    CHECK(BigCount(a.size()) == count_fish(n));
    CHECK(std::is_sorted(a.begin(), a.end()));
  }
  for (const std::string& code : gen_fish_codes(3, FishGenMethod::ViaLeftTrees)) {
    CHECK(Fish::from_json(code).code() == code);
  }
  long long seen = 0;
  for_each_fish(4, FishGenMethod::GrowthOracle, [&](const Fish& f) {
    ++seen;
    CHECK(f.size() == 4);
  });
  CHECK(seen == 22);
}

TEST_CASE("the growth oracle cap reads the environment") {
  const char* old = std::getenv("FISHBIJ_MAX_ORACLE");
  std::string saved = old ? old : "";
  unsetenv("FISHBIJ_MAX_ORACLE");
  CHECK(max_oracle_size() == 8);
  setenv("FISHBIJ_MAX_ORACLE", "3", 1);
  CHECK(max_oracle_size() == 3);
  try {
    gen_fish_codes(4, FishGenMethod::GrowthOracle);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Range);
    CHECK(std::string(e.what()).find("FISHBIJ_MAX_ORACLE") !=
          std::string::npos);
  }
  setenv("FISHBIJ_MAX_ORACLE", "garbage", 1);
  CHECK(max_oracle_size() == 8);
  if (old)
    setenv("FISHBIJ_MAX_ORACLE", saved.c_str(), 1);
  else
    unsetenv("FISHBIJ_MAX_ORACLE");
}

TEST_CASE("statistic registry values on pinned shapes") {
  Fish d = diamond();
  CHECK(fish_statistic(d, "size") == 3);
  CHECK(fish_statistic(d, "descStrips") == 2);
  CHECK(fish_statistic(d, "ascStrips") == 2);
  CHECK(fish_statistic(d, "jawLen") == 2);
  CHECK(fish_statistic(d, "tails") == 1);
  CHECK(fish_statistic(d, "branchCells") == 0);
  CHECK(fish_statistic(d, "finLen") == 4);
  CHECK(fish_statistic(d, "finCells") == 3);
  CHECK_THROWS_AS(fish_statistic(d, "bogus"), Error);

  TernaryTree t = parse_tree(kBigTreeCode);
  CHECK(tree_statistic(t, "nodes") == 11);
  CHECK(tree_statistic(t, "oddAbscissa") == 6);
  CHECK(tree_statistic(t, "evenAbscissa") == 5);
  CHECK(tree_statistic(t, "zeroAbscissa") == 4);
  CHECK(tree_statistic(t, "coreSize") == 5);
  CHECK(tree_statistic(t, "rightBranches") == 3);
  CHECK_THROWS_AS(tree_statistic(t, "bogus"), Error);
}

TEST_CASE("censuses aggregate and serialize") {
  Census c2 = census(Family::Fish, 2, {"tails"});
  CHECK(c2.to_csv() == "tails,count\n1,2\n");
  CHECK(c2.total() == BigCount(2));

  // Total tail count over all fish of size 4 equals the pair count at 3.
  Census c4 = census(Family::Fish, 4, {"tails"});
  CHECK(c4.total() == count_fish(4));
  BigCount weighted = 0;
  for (const auto& [key, count] : c4.rows) weighted += key[0] * count;
  CHECK(weighted == count_pairs(3));

  // Marking a descending strip multiplies each fish by its strip count.
  Census marked = census(Family::MarkedFish, 4, {"size"});
  CHECK(marked.total() == count_ternary(4));

  Census sym = census(Family::SymmetricFish, 7, {"tails"});
  CHECK(sym.total() == count_symmetric_of_size(7));
  BigCount odd = 0, even = 0;
  for (const auto& [key, count] : sym.rows) {
    (key[0] % 2 == 1 ? odd : even) += count;
  }
  CHECK(odd == BigCount(12));
  CHECK(even == BigCount(18));

  CHECK_THROWS_AS(census(Family::Fish, 2, {"bogus"}), Error);
  CHECK_THROWS_AS(census(Family::Ternary, 2, {"tails"}), Error);
}

TEST_CASE("the jaw census mirrors the zero-abscissa census") {
  for (int n = 1; n <= 5; ++n) {
    Census fish = census(Family::Fish, n, {"jawLen"});
    Census left = census(Family::LeftTrees, n, {"zeroAbscissa"});
    CHECK(fish.rows == left.rows);
  }
}

TEST_CASE("census results do not depend on the worker count") {
  Census one = census(Family::Fish, 5, {"tails", "jawLen"},
                      FishGenMethod::ViaLeftTrees, 1);
  Census three = census(Family::Fish, 5, {"tails", "jawLen"},
                        FishGenMethod::ViaLeftTrees, 3);
  CHECK(one.rows == three.rows);
}

TEST_CASE("the fin comparison report is deterministic and corrected-equal") {
  ConjectureReport a = conjecture_diff(3);
  ConjectureReport b = conjecture_diff(3, 2);
  CHECK(a.corrected_equal);
  CHECK(a.text == b.text);
  CHECK(a.text.find("EQUAL") != std::string::npos);
  CHECK_THROWS_AS(conjecture_diff(0), Error);
}
