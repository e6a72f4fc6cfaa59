#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fishbij/bigcount.hpp"
#include "fishbij/bijection.hpp"
#include "fishbij/fish.hpp"
#include "fishbij/ternary.hpp"

namespace fishbij {

// --- Closed-form counts ------------------------------------------------------

BigCount count_fish(int n);     // 2 C(3n,n) / ((n+1)(2n+1)), n >= 1
BigCount count_ternary(int n);  // C(3n,n) / (2n+1), n >= 0
BigCount count_left(int n);     // 2 |T_n| / (n+1), n >= 1
BigCount count_pairs(int n);    // C(3n+1,n) / (n+1), n >= 0
// Left trees with i+1 even-abscissa nodes and j odd-abscissa nodes:
// C(2i+j+1, j) C(i+2j+1, i) / ((i+1)(j+1)).
BigCount count_left_refined(int i, int j);

// Symmetric fish; n is the half-index (fish size 2n+1).
BigCount count_symmetric(int n);             // C(3n+1,n)/(n+1)
BigCount count_symmetric_odd_tails(int n);   // C(3n,n)/(2n+1)
BigCount count_symmetric_even_tails(int n);  // C(3n,n+1)/(2n+1)
// Size-addressed variants (0 for even sizes), used by the CLI.
BigCount count_symmetric_of_size(int size);
BigCount count_symmetric_odd_tails_of_size(int size);
BigCount count_symmetric_even_tails_of_size(int size);

// --- Exhaustive generators ---------------------------------------------------

// Sorted tree codes of all n-node ternary trees (lexicographic enumeration
// order contract).  Memoized per size.
const std::vector<std::string>& ternary_codes(int n);

void for_each_ternary(int n,
                      const std::function<void(const TernaryTree&)>& fn);
void for_each_left(int n, const std::function<void(const TernaryTree&)>& fn);

enum class FishGenMethod { ViaLeftTrees, GrowthOracle };

// Default cap for the growth oracle (overridable via FISHBIJ_MAX_ORACLE).
int max_oracle_size();

// Canonical codes of all fish of size n, sorted.  ViaLeftTrees maps the left
// trees through the jaw bijection; GrowthOracle closes level by level under
// the growth operations with canonical-code dedup and refuses sizes above
// max_oracle_size() (ErrorKind::Range).
std::vector<std::string> gen_fish_codes(int n, FishGenMethod method);
void for_each_fish(int n, FishGenMethod method,
                   const std::function<void(const Fish&)>& fn);

// --- Censuses ----------------------------------------------------------------

enum class Family { Fish, LeftTrees, Ternary, MarkedFish, SymmetricFish };

// Statistic registry (closed; UnknownStatistic otherwise).
//   fish families: size, descStrips, ascStrips, jawLen, tails, branchCells,
//                  finLen, finCells
//   tree families: nodes, oddAbscissa, evenAbscissa, zeroAbscissa, coreSize,
//                  rightBranches
struct Census {
  std::vector<std::string> statistics;
  std::map<std::vector<long long>, BigCount> rows;

  BigCount total() const;
  std::string to_csv() const;  // header = statistics + "count", rows sorted
};

Census census(Family family, int n, const std::vector<std::string>& statistics,
              FishGenMethod method = FishGenMethod::ViaLeftTrees,
              int workers = 1);

long long fish_statistic(const Fish& f, const std::string& name);
long long tree_statistic(const TernaryTree& t, const std::string& name);

// --- Conjectured fin/core census comparison ---------------------------------

// Compares the joint fish census (size, finLen, tails, ascStrips,
// descStrips) over F_n with the left-tree census (nodes, coreSize+1,
// rightBranches+1, evenAbscissa, oddAbscissa+1) over LT_n ("corrected"
// offsets, expected EQUAL), and also the raw comparison with every tree
// statistic unshifted (expected to differ).  Deterministic report.
struct ConjectureReport {
  bool corrected_equal = false;
  bool raw_equal = false;
  std::string text;  // full per-n report with first differing tuples
};
ConjectureReport conjecture_diff(int nmax, int workers = 1);

}  // namespace fishbij
