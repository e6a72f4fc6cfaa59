#include "fishbij/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <sstream>
#include <thread>

namespace fishbij {

// --- Closed-form counts ------------------------------------------------------

BigCount count_fish(int n) {
  if (n < 1) fail(ErrorKind::Range, "fish size must be at least 1");
  return exact_div(2 * binomial(3 * n, n), BigCount(n + 1) * (2 * n + 1));
}

BigCount count_ternary(int n) {
  if (n < 0) fail(ErrorKind::Range, "node count must be nonnegative");
  return exact_div(binomial(3 * n, n), BigCount(2 * n + 1));
}

BigCount count_left(int n) {
  if (n < 1) fail(ErrorKind::Range, "left tree count needs n >= 1");
  return exact_div(2 * count_ternary(n), BigCount(n + 1));
}

BigCount count_pairs(int n) {
  if (n < 0) fail(ErrorKind::Range, "pair total must be nonnegative");
  return exact_div(binomial(3 * n + 1, n), BigCount(n + 1));
}

BigCount count_left_refined(int i, int j) {
  if (i < 0 || j < 0) fail(ErrorKind::Range, "refined indices must be nonnegative");
  return exact_div(binomial(2 * i + j + 1, j) * binomial(i + 2 * j + 1, i),
                   BigCount(i + 1) * (j + 1));
}

BigCount count_symmetric(int n) { return count_pairs(n); }

BigCount count_symmetric_odd_tails(int n) { return count_ternary(n); }

BigCount count_symmetric_even_tails(int n) {
  if (n < 0) fail(ErrorKind::Range, "half-index must be nonnegative");
  return exact_div(binomial(3 * n, n + 1), BigCount(2 * n + 1));
}

namespace {

int half_index(int size) {
  if (size < 1) fail(ErrorKind::Range, "fish size must be at least 1");
  return (size % 2 == 0) ? -1 : (size - 1) / 2;
}

}  // namespace

BigCount count_symmetric_of_size(int size) {
  int n = half_index(size);
  return n < 0 ? BigCount(0) : count_symmetric(n);
}

BigCount count_symmetric_odd_tails_of_size(int size) {
  int n = half_index(size);
  return n < 0 ? BigCount(0) : count_symmetric_odd_tails(n);
}

BigCount count_symmetric_even_tails_of_size(int size) {
  int n = half_index(size);
  return n < 0 ? BigCount(0) : count_symmetric_even_tails(n);
}

// --- Tree generation ---------------------------------------------------------

namespace {

std::mutex g_codes_mutex;
// deque keeps the per-size vectors at stable addresses while new sizes append.
std::deque<std::vector<std::string>> g_codes;

void ensure_codes(int n) {
  if (g_codes.empty()) g_codes.push_back({"."});
  while (static_cast<int>(g_codes.size()) <= n) {
    int m = static_cast<int>(g_codes.size());
    std::vector<std::string> out;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j + i < m; ++j) {
        int k = m - 1 - i - j;
        for (const std::string& a : g_codes[i])
          for (const std::string& b : g_codes[j])
            for (const std::string& c : g_codes[k])
              out.push_back("(" + a + b + c + ")");
      }
    std::sort(out.begin(), out.end());
    g_codes.push_back(std::move(out));
  }
}

}  // namespace

const std::vector<std::string>& ternary_codes(int n) {
  if (n < 0) fail(ErrorKind::Range, "node count must be nonnegative");
  std::lock_guard<std::mutex> lock(g_codes_mutex);
  ensure_codes(n);
  return g_codes[n];
}

void for_each_ternary(int n, const std::function<void(const TernaryTree&)>& fn) {
  for (const std::string& code : ternary_codes(n)) fn(parse_tree(code));
}

void for_each_left(int n, const std::function<void(const TernaryTree&)>& fn) {
  for (const std::string& code : ternary_codes(n)) {
    TernaryTree t = parse_tree(code);
    if (is_left_tree(t)) fn(t);
  }
}

// --- Fish generation ---------------------------------------------------------

int max_oracle_size() {
  const char* env = std::getenv("FISHBIJ_MAX_ORACLE");
  if (!env || !*env) return 8;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end && *end == '\0' && v >= 1 && v <= 1000) return static_cast<int>(v);
  return 8;
}

namespace {

// Adds every fish reachable by double gluings (size-preserving) to the set.
void close_under_double(std::map<std::string, Fish>& level) {
  std::vector<Fish> work;
  work.reserve(level.size());
  for (const auto& [code, f] : level) work.push_back(f);
  while (!work.empty()) {
    Fish f = std::move(work.back());
    work.pop_back();
    for (CellId c = 0; c < f.cell_count(); ++c) {
      CellId a = f.cells()[c].ru, b = f.cells()[c].rl;
      if (a < 0 || b < 0) continue;
      if (f.cells()[a].rl >= 0 || f.cells()[b].ru >= 0) continue;
      Fish g = glue_double(f, a, b);
      std::string code = g.code();
      if (level.emplace(std::move(code), g).second) work.push_back(std::move(g));
    }
  }
}

}  // namespace

std::vector<std::string> gen_fish_codes(int n, FishGenMethod method) {
  if (n < 1) fail(ErrorKind::Range, "fish size must be at least 1");
  std::vector<std::string> out;
  if (method == FishGenMethod::ViaLeftTrees) {
    for_each_left(n, [&](const TernaryTree& t) { out.push_back(phi_left(t).code()); });
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
      fail(ErrorKind::Internal, "two left trees mapped to the same fish");
    return out;
  }
  if (n > max_oracle_size())
    fail(ErrorKind::Range,
         "growth oracle capped at size " + std::to_string(max_oracle_size()) +
             " (raise FISHBIJ_MAX_ORACLE to override)");
  Fish head = Fish::head_fish();
  std::map<std::string, Fish> level;
  level.emplace(head.code(), head);
  close_under_double(level);
  for (int k = 1; k < n; ++k) {
    std::map<std::string, Fish> next;
    for (const auto& [code, f] : level) {
      for (CellId c = 0; c < f.cell_count(); ++c) {
        if (f.cells()[c].ru < 0) {
          Fish g = glue_upper(f, c);
          next.emplace(g.code(), std::move(g));
        }
        if (f.cells()[c].rl < 0) {
          Fish g = glue_lower(f, c);
          next.emplace(g.code(), std::move(g));
        }
      }
    }
    close_under_double(next);
    level = std::move(next);
  }
  out.reserve(level.size());
  for (const auto& [code, f] : level) out.push_back(code);
  return out;  // map iteration is already sorted
}

void for_each_fish(int n, FishGenMethod method,
                   const std::function<void(const Fish&)>& fn) {
  for (const std::string& code : gen_fish_codes(n, method))
    fn(Fish::from_json(code));
}

// --- Censuses ----------------------------------------------------------------

long long fish_statistic(const Fish& f, const std::string& name) {
  if (name == "size") return f.size();
  if (name == "descStrips")
    return static_cast<long long>(strips(f, Orientation::Descending).size());
  if (name == "ascStrips")
    return static_cast<long long>(strips(f, Orientation::Ascending).size());
  if (name == "jawLen") return static_cast<long long>(jaw(f).cells.size());
  if (name == "tails") return static_cast<long long>(tails(f).size());
  if (name == "branchCells") return static_cast<long long>(branch_cells(f).size());
  if (name == "finLen") return fin_length(f);
  if (name == "finCells") return fin_cells(f);
  fail(ErrorKind::UnknownStatistic, "unknown fish statistic \"" + name + "\"");
}

long long tree_statistic(const TernaryTree& t, const std::string& name) {
  if (name == "nodes") return t.node_count();
  if (name == "oddAbscissa") return count_odd_abscissa(t);
  if (name == "evenAbscissa") return count_even_abscissa(t);
  if (name == "zeroAbscissa") return count_zero_abscissa(t);
  if (name == "coreSize") return core_size(t);
  if (name == "rightBranches") return count_right_branches(t);
  fail(ErrorKind::UnknownStatistic, "unknown tree statistic \"" + name + "\"");
}

BigCount Census::total() const {
  BigCount t = 0;
  for (const auto& [key, count] : rows) t += count;
  return t;
}

std::string Census::to_csv() const {
  std::string out;
  for (size_t i = 0; i < statistics.size(); ++i) {
    out += statistics[i];
    out += ',';
  }
  out += "count\n";
  for (const auto& [key, count] : rows) {
    for (long long v : key) {
      out += std::to_string(v);
      out += ',';
    }
    out += count.str();
    out += '\n';
  }
  return out;
}

namespace {

bool is_tree_family(Family f) {
  return f == Family::LeftTrees || f == Family::Ternary;
}

// Statistic tuple plus multiplicity of one enumerated object.
void census_one(Family family, const std::string& code,
                const std::vector<std::string>& stats, Census& out) {
  if (is_tree_family(family)) {
    TernaryTree t = parse_tree(code);
    if (family == Family::LeftTrees && !is_left_tree(t)) return;
    std::vector<long long> key;
    key.reserve(stats.size());
    for (const std::string& s : stats) key.push_back(tree_statistic(t, s));
    out.rows[key] += 1;
    return;
  }
  Fish f = Fish::from_json(code);
  if (family == Family::SymmetricFish && !is_symmetric(f)) return;
  std::vector<long long> key;
  key.reserve(stats.size());
  for (const std::string& s : stats) key.push_back(fish_statistic(f, s));
  BigCount weight = 1;
  if (family == Family::MarkedFish)
    weight = static_cast<long long>(strips(f, Orientation::Descending).size());
  out.rows[key] += weight;
}

}  // namespace

Census census(Family family, int n, const std::vector<std::string>& statistics,
              FishGenMethod method, int workers) {
  Census out;
  out.statistics = statistics;
  // Validate statistic names up front so an empty enumeration still rejects
  // unknown names.
  if (is_tree_family(family)) {
    for (const std::string& s : statistics) tree_statistic(TernaryTree::leaf(), s);
  } else {
    for (const std::string& s : statistics) fish_statistic(Fish::head_fish(), s);
  }
  std::vector<std::string> codes;
  if (is_tree_family(family)) {
    codes = ternary_codes(n);
  } else {
    codes = gen_fish_codes(n, method);
  }
  if (workers < 1) workers = 1;
  if (workers == 1 || codes.size() < 64) {
    for (const std::string& code : codes) census_one(family, code, statistics, out);
    return out;
  }
  std::vector<Census> partial(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w]() {
      for (size_t i = w; i < codes.size(); i += workers)
        census_one(family, codes[i], statistics, partial[w]);
    });
  }
  for (std::thread& t : threads) t.join();
  for (const Census& p : partial)
    for (const auto& [key, count] : p.rows) out.rows[key] += count;
  return out;
}

// --- Conjecture comparison ---------------------------------------------------

namespace {

std::string tuple_str(const std::vector<long long>& key) {
  std::string out = "(";
  for (size_t i = 0; i < key.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(key[i]);
  }
  out += ")";
  return out;
}

// EQUAL line or the first differing tuple with both multiplicities.
std::string compare_rows(const std::map<std::vector<long long>, BigCount>& fish,
                         const std::map<std::vector<long long>, BigCount>& trees,
                         bool* equal) {
  auto fi = fish.begin();
  auto ti = trees.begin();
  while (fi != fish.end() || ti != trees.end()) {
    bool take_fish = (ti == trees.end()) ||
                     (fi != fish.end() && fi->first < ti->first);
    bool take_tree = (fi == fish.end()) ||
                     (ti != trees.end() && ti->first < fi->first);
    if (take_fish) {
      *equal = false;
      return "first difference at " + tuple_str(fi->first) + ": fish " +
             fi->second.str() + " vs trees 0";
    }
    if (take_tree) {
      *equal = false;
      return "first difference at " + tuple_str(ti->first) + ": fish 0 vs trees " +
             ti->second.str();
    }
    if (fi->second != ti->second) {
      *equal = false;
      return "first difference at " + tuple_str(fi->first) + ": fish " +
             fi->second.str() + " vs trees " + ti->second.str();
    }
    ++fi;
    ++ti;
  }
  return "EQUAL";
}

}  // namespace

ConjectureReport conjecture_diff(int nmax, int workers) {
  if (nmax < 1) fail(ErrorKind::Range, "conjecture comparison needs nmax >= 1");
  ConjectureReport r;
  r.corrected_equal = true;
  r.raw_equal = true;
  std::ostringstream text;
  text << "fish statistics (size, finLen, tails, ascStrips, descStrips) over "
          "F_n vs\n"
       << "left tree statistics (nodes, coreSize, rightBranches, evenAbscissa, "
          "oddAbscissa) over LT_n\n"
       << "corrected offsets: finLen ~ coreSize+1, tails ~ rightBranches+1, "
          "ascStrips ~ evenAbscissa, descStrips ~ oddAbscissa+1\n"
       << "raw offsets:       every statistic unshifted\n";
  for (int n = 1; n <= nmax; ++n) {
    Census fish = census(Family::Fish, n,
                         {"size", "finLen", "tails", "ascStrips", "descStrips"},
                         FishGenMethod::ViaLeftTrees, workers);
    Census trees = census(
        Family::LeftTrees, n,
        {"nodes", "coreSize", "rightBranches", "evenAbscissa", "oddAbscissa"},
        FishGenMethod::ViaLeftTrees, workers);
    std::map<std::vector<long long>, BigCount> tree_corrected;
    for (const auto& [key, count] : trees.rows) {
      tree_corrected[{key[0], key[1] + 1, key[2] + 1, key[3], key[4] + 1}] +=
          count;
    }
    bool eq = true;
    std::string line = compare_rows(fish.rows, tree_corrected, &eq);
    text << "n=" << n << " corrected " << line << "\n";
    r.corrected_equal = r.corrected_equal && eq;
    eq = true;
    line = compare_rows(fish.rows, trees.rows, &eq);
    text << "n=" << n << " raw       " << line << "\n";
    r.raw_equal = r.raw_equal && eq;
  }
  text << "corrected offsets: " << (r.corrected_equal ? "EQUAL" : "DIFFER")
       << " for n=1.." << nmax << "\n";
  text << "raw offsets:       " << (r.raw_equal ? "EQUAL" : "DIFFER")
       << " for n=1.." << nmax << "\n";
  r.text = text.str();
  return r;
}

}  // namespace fishbij
