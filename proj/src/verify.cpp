#include "fishbij/verify.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fishbij/bigcount.hpp"
#include "fishbij/bijection.hpp"
#include "fishbij/fish.hpp"
#include "fishbij/qpoly.hpp"
#include "fishbij/ternary.hpp"

namespace fishbij {

namespace {

using Rows = std::map<std::vector<long long>, BigCount>;

std::string tuple_str(const std::vector<long long>& key) {
  std::string s = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(key[i]);
  }
  s += ")";
  return s;
}

// Empty string if the two row maps agree, else the first difference.
std::string first_row_diff(const Rows& a, const Rows& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      return "at " + tuple_str(ia->first) + ": " + ia->second.str() +
             " vs absent";
    }
    if (ia == a.end() || ib->first < ia->first) {
      return "at " + tuple_str(ib->first) + ": absent vs " + ib->second.str();
    }
    if (ia->second != ib->second) {
      return "at " + tuple_str(ia->first) + ": " + ia->second.str() + " vs " +
             ib->second.str();
    }
    ++ia;
    ++ib;
  }
  return "";
}

}  // namespace

std::string VerifyResult::text() const {
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

void VerifyResult::note(bool ok, const std::string& what) {
  lines.push_back((ok ? "PASS " : "FAIL ") + what);
  pass = pass && ok;
}

void VerifyResult::merge(const VerifyResult& o) {
  pass = pass && o.pass;
  lines.insert(lines.end(), o.lines.begin(), o.lines.end());
}

VerifyResult verify_lemma2(int nmax) {
  VerifyResult r;
  for (int n = 1; n <= nmax; ++n) {
    long long checked = 0;
    std::string offender;
    for_each_fish(n, FishGenMethod::ViaLeftTrees, [&](const Fish& f) {
      ++checked;
      long long stems = static_cast<long long>(stem_cells(f).size());
      long long tail_count = static_cast<long long>(tails(f).size());
      long long branches = static_cast<long long>(branch_cells(f).size());
      if (offender.empty() &&
          (stems != f.size() || branches != tail_count - 1)) {
        std::ostringstream os;
        os << "; first offender has " << stems << " stem cells, " << tail_count
           << " tails, " << branches << " branch cells";
        offender = os.str();
      }
    });
    std::ostringstream os;
    os << "lemma2 n=" << n << ": stem cells = size and branch cells = tails - 1"
       << " for all " << checked << " fish" << offender;
    r.note(offender.empty(), os.str());
  }
  return r;
}

VerifyResult verify_thm1(int nmax) {
  VerifyResult r;
  for (int n = 1; n <= nmax; ++n) {
    std::set<std::pair<std::string, int>> image;
    long long trees = 0, collisions = 0, stat_bad = 0, round_bad = 0;
    for_each_ternary(n, [&](const TernaryTree& t) {
      ++trees;
      MarkedFish m = phi(t);
      if (!image.insert({m.fish.code(), m.strip}).second) ++collisions;
      long long desc = static_cast<long long>(
          strips(m.fish, Orientation::Descending).size());
      long long asc = static_cast<long long>(
          strips(m.fish, Orientation::Ascending).size());
      if (desc != count_odd_abscissa(t) + 1 || asc != count_even_abscissa(t))
        ++stat_bad;
      if (phi_inv(m) != t) ++round_bad;
    });
    long long strip_total = 0, missing = 0;
    for_each_fish(n, FishGenMethod::ViaLeftTrees, [&](const Fish& f) {
      int desc = static_cast<int>(strips(f, Orientation::Descending).size());
      strip_total += desc;
      for (int q = 0; q < desc; ++q) {
        if (!image.count({f.code(), q})) ++missing;
      }
    });
    {
      std::ostringstream os;
      os << "thm1 n=" << n << ": phi injective on " << trees
         << " ternary trees (" << collisions << " collisions)";
      r.note(collisions == 0, os.str());
    }
    {
      std::ostringstream os;
      os << "thm1 n=" << n << ": phi_inv(phi(t)) = t for all " << trees
         << " trees (" << round_bad << " failures)";
      r.note(round_bad == 0, os.str());
    }
    {
      std::ostringstream os;
      os << "thm1 n=" << n << ": descending strips = odd abscissas + 1 and"
         << " ascending strips = even abscissas (" << stat_bad
         << " mismatches)";
      r.note(stat_bad == 0, os.str());
    }
    {
      std::ostringstream os;
      os << "thm1 n=" << n << ": image covers every descending strip ("
         << image.size() << " marked fish = " << strip_total << " strips, "
         << missing << " missing)";
      r.note(
          missing == 0 && static_cast<long long>(image.size()) == strip_total,
          os.str());
    }
  }
  return r;
}

VerifyResult verify_thm2(int nmax) {
  VerifyResult r;
  for (int n = 1; n <= nmax; ++n) {
    std::vector<long long> fish_by_strip(n, 0);  // index l = descStrips - 1
    std::vector<long long> trees_by_odd(n, 0);   // index l = odd abscissas
    long long fish_total = 0, tree_total = 0, strayed = 0;
    for_each_fish(n, FishGenMethod::ViaLeftTrees, [&](const Fish& f) {
      ++fish_total;
      int l = static_cast<int>(strips(f, Orientation::Descending).size()) - 1;
      if (l < 0 || l >= n)
        ++strayed;
      else
        ++fish_by_strip[l];
    });
    for_each_ternary(n, [&](const TernaryTree& t) {
      ++tree_total;
      ++trees_by_odd[count_odd_abscissa(t)];
    });
    {
      std::ostringstream os;
      os << "thm2 n=" << n << ": (n+1)|F_n| = 2|T_n| (" << (n + 1) << "*"
         << fish_total << " = " << (n + 1) * fish_total << ", 2*" << tree_total
         << " = " << 2 * tree_total << ")";
      r.note((n + 1) * fish_total == 2 * tree_total, os.str());
    }
    std::string bad;
    if (strayed > 0) bad = "; " + std::to_string(strayed) +
                           " fish with out-of-range strip count";
    for (int l = 0; l < n && bad.empty(); ++l) {
      long long fl = fish_by_strip[l];
      if ((l + 1) * fl != trees_by_odd[l]) {
        std::ostringstream os;
        os << "; first mismatch at l=" << l << ": " << (l + 1) << "*" << fl
           << " != " << trees_by_odd[l];
        bad = os.str();
      } else if ((n - l) * fl != trees_by_odd[n - 1 - l]) {
        std::ostringstream os;
        os << "; first mismatch at l=" << l << ": " << (n - l) << "*" << fl
           << " != " << trees_by_odd[n - 1 - l];
        bad = os.str();
      }
    }
    {
      std::ostringstream os;
      os << "thm2 n=" << n << " refined: (l+1)|F_{n,l}| = |T_{n,l}| and"
         << " (n-l)|F_{n,l}| = |T_{n,n-1-l}| for l = 0.." << (n - 1) << bad;
      r.note(bad.empty(), os.str());
    }
  }
  return r;
}

VerifyResult verify_thm3(int nmax, int workers) {
  VerifyResult r;
  for (int n = 1; n <= nmax; ++n) {
    long long left_trees = 0, forward_bad = 0, stat_bad = 0;
    std::set<std::string> fish_codes;
    for_each_left(n, [&](const TernaryTree& t) {
      ++left_trees;
      Fish f = phi_left(t);
      fish_codes.insert(f.code());
      long long desc =
          static_cast<long long>(strips(f, Orientation::Descending).size());
      long long asc =
          static_cast<long long>(strips(f, Orientation::Ascending).size());
      long long jl = static_cast<long long>(jaw(f).cells.size());
      if (desc != count_odd_abscissa(t) + 1 || asc != count_even_abscissa(t) ||
          jl != count_zero_abscissa(t))
        ++stat_bad;
      if (phi_left_inv(f) != t) ++forward_bad;
    });
    {
      std::ostringstream os;
      os << "thm3 n=" << n << ": phi_left_inv(phi_left(t)) = t on all "
         << left_trees << " left trees, " << fish_codes.size()
         << " distinct fish (" << forward_bad << " failures)";
      r.note(forward_bad == 0 &&
                 static_cast<long long>(fish_codes.size()) == left_trees,
             os.str());
    }
    {
      std::ostringstream os;
      os << "thm3 n=" << n << ": strips and jaw match abscissa parities on all "
         << left_trees << " left trees (" << stat_bad << " mismatches)";
      r.note(stat_bad == 0, os.str());
    }
    long long fish_seen = 0, backward_bad = 0;
    for_each_fish(n, FishGenMethod::ViaLeftTrees, [&](const Fish& f) {
      ++fish_seen;
      TernaryTree t = phi_left_inv(f);
      if (!is_left_tree(t) || phi_left(t) != f) ++backward_bad;
    });
    {
      std::ostringstream os;
      os << "thm3 n=" << n << ": phi_left(phi_left_inv(F)) = F on all "
         << fish_seen << " fish (" << backward_bad << " failures)";
      r.note(backward_bad == 0, os.str());
    }
    Census cf = census(Family::Fish, n, {"descStrips", "ascStrips", "jawLen"},
                       FishGenMethod::ViaLeftTrees, workers);
    Census ct = census(Family::LeftTrees, n,
                       {"oddAbscissa", "evenAbscissa", "zeroAbscissa"},
                       FishGenMethod::ViaLeftTrees, workers);
    Rows shifted;
    for (const auto& [key, cnt] : ct.rows)
      shifted[{key[0] + 1, key[1], key[2]}] += cnt;
    std::string diff = first_row_diff(cf.rows, shifted);
    {
      std::ostringstream os;
      os << "thm3 n=" << n
         << ": joint census (descStrips, ascStrips, jawLen) ="
         << " (oddAbscissa+1, evenAbscissa, zeroAbscissa) over "
         << cf.total().str() << " fish";
      if (!diff.empty()) os << "; first difference " << diff;
      r.note(diff.empty(), os.str());
    }
  }
  return r;
}

VerifyResult verify_tails(int nmax) {
  VerifyResult r;
  for (int n = 1; n <= nmax; ++n) {
    long long marked = 0, forward_bad = 0, conj_bad = 0;
    for_each_fish(n, FishGenMethod::ViaLeftTrees, [&](const Fish& f) {
      std::vector<CellId> conj_map;
      Fish fc = conjugate_mapped(f, &conj_map);
      for (CellId t : tails(f)) {
        ++marked;
        TreePair p = tails_to_pair(f, t);
        if (p.first.node_count() + p.second.node_count() != n - 1) {
          ++forward_bad;
          continue;
        }
        TailedFish back = pair_to_tailed_fish(p);
        if (back.fish != f || back.tail != t) ++forward_bad;
        TreePair pc = tails_to_pair(fc, conj_map[t]);
        if (pc.first != p.second || pc.second != p.first) ++conj_bad;
      }
    });
    BigCount expect = count_pairs(n - 1);
    {
      std::ostringstream os;
      os << "tails n=" << n << ": total tails over all fish = " << marked
         << ", pair formula = " << expect.str();
      r.note(BigCount(marked) == expect, os.str());
    }
    {
      std::ostringstream os;
      os << "tails n=" << n << ": (F,t) -> pair -> (F,t) round-trips on all "
         << marked << " marked fish (" << forward_bad << " failures)";
      r.note(forward_bad == 0, os.str());
    }
    {
      std::ostringstream os;
      os << "tails n=" << n << ": conjugation swaps the tree pair on all "
         << marked << " marked fish (" << conj_bad << " failures)";
      r.note(conj_bad == 0, os.str());
    }
    long long pair_count = 0, backward_bad = 0;
    for (int a = 0; a <= n - 1; ++a) {
      for (const std::string& ca : ternary_codes(a)) {
        for (const std::string& cb : ternary_codes(n - 1 - a)) {
          ++pair_count;
          TreePair p{parse_tree(ca), parse_tree(cb)};
          TailedFish tf = pair_to_tailed_fish(p);
          if (!is_tail(tf.fish, tf.tail)) {
            ++backward_bad;
            continue;
          }
          TreePair q = tails_to_pair(tf.fish, tf.tail);
          if (q.first != p.first || q.second != p.second) ++backward_bad;
        }
      }
    }
    {
      std::ostringstream os;
      os << "tails n=" << n << ": pair -> (F,t) -> pair round-trips on all "
         << pair_count << " pairs of total size " << (n - 1) << " ("
         << backward_bad << " failures)";
      r.note(backward_bad == 0 && BigCount(pair_count) == expect, os.str());
    }
  }
  return r;
}

VerifyResult verify_symmetric(int nmax) {
  VerifyResult r;
  for (int s = 1; s <= nmax; ++s) {
    std::vector<Fish> sym;
    long long odd_tails = 0, even_tails = 0;
    for_each_fish(s, FishGenMethod::ViaLeftTrees, [&](const Fish& f) {
      if (!is_symmetric(f)) return;
      sym.push_back(f);
      if (tails(f).size() % 2 == 1)
        ++odd_tails;
      else
        ++even_tails;
    });
    if (s % 2 == 0) {
      std::ostringstream os;
      os << "symmetric size=" << s << ": no symmetric fish of even size ("
         << sym.size() << " found)";
      r.note(sym.empty(), os.str());
      continue;
    }
    int h = (s - 1) / 2;
    {
      std::ostringstream os;
      os << "symmetric size=" << s << ": " << sym.size()
         << " symmetric fish, formula " << count_symmetric_of_size(s).str();
      r.note(BigCount(static_cast<long long>(sym.size())) ==
                 count_symmetric_of_size(s),
             os.str());
    }
    {
      std::ostringstream os;
      os << "symmetric size=" << s << ": odd/even tail split " << odd_tails
         << "/" << even_tails << ", formulas "
         << count_symmetric_odd_tails_of_size(s).str() << "/"
         << count_symmetric_even_tails_of_size(s).str();
      r.note(BigCount(odd_tails) == count_symmetric_odd_tails_of_size(s) &&
                 BigCount(even_tails) == count_symmetric_even_tails_of_size(s),
             os.str());
    }
    long long round_bad = 0;
    std::set<std::pair<std::string, std::string>> seen_pairs;
    for (const Fish& f : sym) {
      TreePair p = symmetric_to_pair(f);
      bool ok = p.first.node_count() + p.second.node_count() == h;
      bool odd = tails(f).size() % 2 == 1;
      if (odd != p.second.empty()) ok = false;
      if (ok && pair_to_symmetric(p) != f) ok = false;
      if (!seen_pairs.insert({tree_code(p.first), tree_code(p.second)}).second)
        ok = false;
      if (!ok) ++round_bad;
    }
    {
      std::ostringstream os;
      os << "symmetric size=" << s
         << ": fish -> pair -> fish round-trips with total " << h
         << " nodes and tail parity matching second-tree emptiness ("
         << round_bad << " failures)";
      r.note(round_bad == 0, os.str());
    }
    long long pair_count = 0, backward_bad = 0;
    for (int a = 0; a <= h; ++a) {
      for (const std::string& ca : ternary_codes(a)) {
        for (const std::string& cb : ternary_codes(h - a)) {
          ++pair_count;
          TreePair p{parse_tree(ca), parse_tree(cb)};
          Fish f = pair_to_symmetric(p);
          bool ok = is_symmetric(f) && f.size() == s;
          if (ok) {
            TreePair q = symmetric_to_pair(f);
            ok = q.first == p.first && q.second == p.second;
          }
          if (!ok) ++backward_bad;
        }
      }
    }
    {
      std::ostringstream os;
      os << "symmetric size=" << s
         << ": pair -> fish -> pair round-trips on all " << pair_count
         << " pairs of total size " << h << " (" << backward_bad
         << " failures)";
      r.note(backward_bad == 0 &&
                 BigCount(pair_count) == count_symmetric_of_size(s),
             os.str());
    }
  }
  return r;
}

VerifyResult verify_lefttrees(int nmax, int workers) {
  VerifyResult r;
  for (int n = 1; n <= nmax; ++n) {
    Census c = census(Family::LeftTrees, n, {"evenAbscissa", "oddAbscissa"},
                      FishGenMethod::ViaLeftTrees, workers);
    BigCount total = c.total();
    BigCount formula = count_left(n);
    {
      std::ostringstream os;
      os << "lefttrees n=" << n << ": enumerated " << total.str()
         << " left trees, formula " << formula.str();
      r.note(total == formula, os.str());
    }
    std::string bad;
    for (const auto& [key, cnt] : c.rows) {
      BigCount expect = count_left_refined(static_cast<int>(key[0]) - 1,
                                           static_cast<int>(key[1]));
      if (cnt != expect) {
        std::ostringstream os;
        os << "; first mismatch at (i,j)=(" << key[0] - 1 << "," << key[1]
           << "): " << cnt.str() << " vs " << expect.str();
        bad = os.str();
        break;
      }
    }
    {
      std::ostringstream os;
      os << "lefttrees n=" << n << ": refined formula matches at all "
         << c.rows.size() << " (evenAbscissa-1, oddAbscissa) cells" << bad;
      r.note(bad.empty(), os.str());
    }
    BigCount sum_odd = 0, sum_even = 0;
    for (const auto& [key, cnt] : c.rows) {
      sum_even += cnt * key[0];
      sum_odd += cnt * key[1];
    }
    BigCount tern = count_ternary(n);
    {
      std::ostringstream os;
      BigCount diff = tern - formula;
      os << "lefttrees n=" << n << ": marked-node counts (odd "
         << sum_odd.str() << " = |T_n| - |LT_n| " << diff.str() << ", even "
         << sum_even.str() << " = |T_n| " << tern.str() << ")";
      r.note(sum_odd == tern - formula && sum_even == tern, os.str());
    }
  }
  return r;
}

VerifyResult verify_oracle(int nmax) {
  VerifyResult r;
  int cap = max_oracle_size();
  int top = std::min(nmax, cap);
  for (int n = 1; n <= top; ++n) {
    std::vector<std::string> via =
        gen_fish_codes(n, FishGenMethod::ViaLeftTrees);
    std::vector<std::string> oracle =
        gen_fish_codes(n, FishGenMethod::GrowthOracle);
    bool equal = via == oracle;
    std::ostringstream os;
    os << "oracle n=" << n << ": " << oracle.size() << " == " << via.size()
       << " fish, code sets " << (equal ? "identical" : "DIFFER");
    if (!equal) {
      std::vector<std::string> d;
      std::set_difference(oracle.begin(), oracle.end(), via.begin(), via.end(),
                          std::back_inserter(d));
      if (!d.empty()) {
        os << "; only from growth: " << d.front();
      } else {
        std::set_difference(via.begin(), via.end(), oracle.begin(),
                            oracle.end(), std::back_inserter(d));
        if (!d.empty()) os << "; only from left trees: " << d.front();
      }
    }
    r.note(equal, os.str());
  }
  if (top < nmax) {
    std::ostringstream os;
    os << "oracle: sizes " << top + 1 << ".." << nmax
       << " skipped (FISHBIJ_MAX_ORACLE caps the growth method at " << cap
       << ")";
    r.note(true, os.str());
  }
  return r;
}

VerifyResult verify_qpoly(int nmax) {
  VerifyResult r;
  static const char* kKnown[] = {
      "1",
      "1 0 0 1",
      "1 0 0 1 1 0 1 1 0 0 1",
      "1 0 0 1 1 1 1 1 2 2 1 1 2 2 1 1 1 1 1 0 0 1",
  };
  for (int n = 1; n <= std::min(nmax, 4); ++n) {
    std::string got = g_polynomial(n).to_string();
    std::ostringstream os;
    os << "qpoly n=" << n << ": G_" << n << " coefficients [" << got << "]";
    if (got != kKnown[n - 1]) os << ", reference [" << kKnown[n - 1] << "]";
    r.note(got == kKnown[n - 1], os.str());
  }
  int top1 = std::max(nmax, 20);
  long long bad1 = 0;
  for (int n = 1; n <= top1; ++n)
    if (g_polynomial(n).evaluate(1) != count_fish(n)) ++bad1;
  {
    std::ostringstream os;
    os << "qpoly: G_n(1) = |F_n| for n = 1.." << top1 << " (" << bad1
       << " mismatches)";
    r.note(bad1 == 0, os.str());
  }
  static const long long kAtMinusOne[] = {1, 0, 2, 0, 7, 0, 30, 0, 143};
  std::string seq, bad2;
  for (int n = 1; n <= 9; ++n) {
    BigCount v = g_polynomial(n).evaluate(-1);
    if (n > 1) seq += ",";
    seq += v.str();
    if ((v != kAtMinusOne[n - 1] || v != count_symmetric_of_size(n)) &&
        bad2.empty())
      bad2 = "; first mismatch at n=" + std::to_string(n);
  }
  {
    std::ostringstream os;
    os << "qpoly: G_n(-1) for n = 1..9 = " << seq
       << " (expected 1,0,2,0,7,0,30,0,143 = symmetric fish counts)" << bad2;
    r.note(bad2.empty(), os.str());
  }
  long long bad3 = 0;
  for (int m = 0; m <= 30; ++m) {
    for (int k = 0; k <= m; ++k) {
      QPolynomial p = q_binomial(m, k);
      bool ok = p.evaluate(1) == binomial(m, k);
      const std::vector<BigCount>& c = p.coefficients();
      int d = p.degree();
      for (int i = 0; ok && i <= d; ++i)
        if (c[i] != c[d - i]) ok = false;
      bool rising = true;
      for (int i = 1; ok && i <= d; ++i) {
        if (c[i] < c[i - 1])
          rising = false;
        else if (!rising && c[i] > c[i - 1])
          ok = false;
      }
      if (!ok) ++bad3;
    }
  }
  {
    std::ostringstream os;
    os << "qpoly: q-binomials for m <= 30 evaluate to C(m,k), are symmetric"
       << " and unimodal (" << bad3 << " failures)";
    r.note(bad3 == 0, os.str());
  }
  return r;
}

VerifyResult run_suite(const std::string& suite, int nmax, int workers) {
  if (nmax < 1) fail(ErrorKind::Range, "verify nmax must be >= 1");
  if (workers < 1) fail(ErrorKind::Range, "verify workers must be >= 1");
  if (suite == "lemma2") return verify_lemma2(nmax);
  if (suite == "thm1") return verify_thm1(nmax);
  if (suite == "thm2") return verify_thm2(nmax);
  if (suite == "thm3") return verify_thm3(nmax, workers);
  if (suite == "tails") return verify_tails(nmax);
  if (suite == "symmetric") return verify_symmetric(nmax);
  if (suite == "lefttrees") return verify_lefttrees(nmax, workers);
  if (suite == "oracle") return verify_oracle(nmax);
  if (suite == "qpoly") return verify_qpoly(nmax);
  if (suite == "all") {
    VerifyResult r;
    r.merge(verify_lemma2(nmax));
    r.merge(verify_thm1(nmax));
    r.merge(verify_thm2(nmax));
    r.merge(verify_thm3(nmax, workers));
    r.merge(verify_tails(nmax));
    r.merge(verify_symmetric(nmax));
    r.merge(verify_lefttrees(nmax, workers));
    r.merge(verify_oracle(nmax));
    r.merge(verify_qpoly(nmax));
    return r;
  }
  fail(ErrorKind::Range, "unknown verify suite \"" + suite + "\"");
}

}  // namespace fishbij
