#include "fishbij.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "fishbij/bijection.hpp"
#include "fishbij/enumerate.hpp"
#include "fishbij/errors.hpp"
#include "fishbij/fish.hpp"
#include "fishbij/qpoly.hpp"
#include "fishbij/render.hpp"
#include "fishbij/ternary.hpp"
#include "fishbij/verify.hpp"

struct fishbij_fish {
  fishbij::Fish value;
};

struct fishbij_tree {
  fishbij::TernaryTree value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fishbij_status status_of(fishbij::ErrorKind k) {
  using fishbij::ErrorKind;
  switch (k) {
    case ErrorKind::EdgeOccupied:
      return FISHBIJ_E_EDGE_OCCUPIED;
    case ErrorKind::BadCell:
      return FISHBIJ_E_BAD_CELL;
    case ErrorKind::NotDoubleSite:
      return FISHBIJ_E_NOT_DOUBLE_SITE;
    case ErrorKind::EmptyTree:
      return FISHBIJ_E_EMPTY_TREE;
    case ErrorKind::InconsistentLabels:
      return FISHBIJ_E_INCONSISTENT_LABELS;
    case ErrorKind::ParseError:
      return FISHBIJ_E_PARSE;
    case ErrorKind::NotLeftTree:
      return FISHBIJ_E_NOT_LEFT_TREE;
    case ErrorKind::NotATail:
      return FISHBIJ_E_NOT_A_TAIL;
    case ErrorKind::NotSymmetric:
      return FISHBIJ_E_NOT_SYMMETRIC;
    case ErrorKind::BadPairTotal:
      return FISHBIJ_E_BAD_PAIR_TOTAL;
    case ErrorKind::UnknownStatistic:
      return FISHBIJ_E_UNKNOWN_STATISTIC;
    case ErrorKind::InexactDivision:
      return FISHBIJ_E_INEXACT_DIVISION;
    case ErrorKind::BadStripIndex:
      return FISHBIJ_E_BAD_STRIP_INDEX;
    case ErrorKind::InvalidFish:
      return FISHBIJ_E_INVALID_FISH;
    case ErrorKind::Range:
      return FISHBIJ_E_RANGE;
    case ErrorKind::IoError:
      return FISHBIJ_E_IO;
    case ErrorKind::Internal:
      return FISHBIJ_E_INTERNAL;
  }
  return FISHBIJ_E_INTERNAL;
}

template <typename Fn>
fishbij_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return FISHBIJ_OK;
  } catch (const fishbij::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FISHBIJ_E_INTERNAL;
  }
}

// Argument guards: reject null pointers before touching the library.
fishbij_status null_arg(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return FISHBIJ_E_RANGE;
}

fishbij::Family parse_family(const std::string& name) {
  if (name == "fish") return fishbij::Family::Fish;
  if (name == "left") return fishbij::Family::LeftTrees;
  if (name == "ternary") return fishbij::Family::Ternary;
  if (name == "marked") return fishbij::Family::MarkedFish;
  if (name == "symmetric") return fishbij::Family::SymmetricFish;
  fishbij::fail(fishbij::ErrorKind::Range,
                "unknown census family \"" + name + "\"");
}

fishbij::FishGenMethod parse_method(const std::string& name) {
  if (name == "via-left-trees") return fishbij::FishGenMethod::ViaLeftTrees;
  if (name == "oracle") return fishbij::FishGenMethod::GrowthOracle;
  fishbij::fail(fishbij::ErrorKind::Range,
                "unknown generation method \"" + name + "\"");
}

}  // namespace

extern "C" {

const char* fishbij_version(void) { return "1.0.0"; }

const char* fishbij_status_name(fishbij_status s) {
  switch (s) {
    case FISHBIJ_OK:
      return "ok";
    case FISHBIJ_E_EDGE_OCCUPIED:
      return "edge-occupied";
    case FISHBIJ_E_BAD_CELL:
      return "bad-cell";
    case FISHBIJ_E_NOT_DOUBLE_SITE:
      return "not-double-site";
    case FISHBIJ_E_EMPTY_TREE:
      return "empty-tree";
    case FISHBIJ_E_INCONSISTENT_LABELS:
      return "inconsistent-labels";
    case FISHBIJ_E_PARSE:
      return "parse-error";
    case FISHBIJ_E_NOT_LEFT_TREE:
      return "not-left-tree";
    case FISHBIJ_E_NOT_A_TAIL:
      return "not-a-tail";
    case FISHBIJ_E_NOT_SYMMETRIC:
      return "not-symmetric";
    case FISHBIJ_E_BAD_PAIR_TOTAL:
      return "bad-pair-total";
    case FISHBIJ_E_UNKNOWN_STATISTIC:
      return "unknown-statistic";
    case FISHBIJ_E_INEXACT_DIVISION:
      return "inexact-division";
    case FISHBIJ_E_BAD_STRIP_INDEX:
      return "bad-strip-index";
    case FISHBIJ_E_INVALID_FISH:
      return "invalid-fish";
    case FISHBIJ_E_RANGE:
      return "range";
    case FISHBIJ_E_IO:
      return "io-error";
    case FISHBIJ_E_INTERNAL:
      return "internal";
  }
  return "internal";
}

const char* fishbij_last_error(void) { return g_last_error.c_str(); }

void fishbij_string_free(char* s) { std::free(s); }

fishbij_status fishbij_fish_parse(const char* json, fishbij_fish** out) {
  if (json == nullptr) return null_arg("json");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    fishbij::Fish f = fishbij::Fish::from_json(json);
    *out = new fishbij_fish{std::move(f)};
  });
}

fishbij_status fishbij_head_fish(fishbij_fish** out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = new fishbij_fish{fishbij::Fish::head_fish()}; });
}

void fishbij_fish_free(fishbij_fish* f) { delete f; }

fishbij_status fishbij_fish_json(const fishbij_fish* f, char** out) {
  if (f == nullptr) return null_arg("fish");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = dup_string(f->value.to_json()); });
}

fishbij_status fishbij_fish_size(const fishbij_fish* f, int* out) {
  if (f == nullptr) return null_arg("fish");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = f->value.size(); });
}

fishbij_status fishbij_fish_cell_count(const fishbij_fish* f, int* out) {
  if (f == nullptr) return null_arg("fish");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = f->value.cell_count(); });
}

fishbij_status fishbij_fish_statistic(const fishbij_fish* f, const char* name,
                                      long long* out) {
  if (f == nullptr) return null_arg("fish");
  if (name == nullptr) return null_arg("name");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = fishbij::fish_statistic(f->value, name); });
}

fishbij_status fishbij_fish_equal(const fishbij_fish* a, const fishbij_fish* b,
                                  int* out) {
  if (a == nullptr) return null_arg("a");
  if (b == nullptr) return null_arg("b");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = a->value == b->value ? 1 : 0; });
}

fishbij_status fishbij_glue_upper(const fishbij_fish* f, int cell,
                                  fishbij_fish** out) {
  if (f == nullptr) return null_arg("fish");
  if (out == nullptr) return null_arg("out");
  return guarded(
      [&] { *out = new fishbij_fish{fishbij::glue_upper(f->value, cell)}; });
}

fishbij_status fishbij_glue_lower(const fishbij_fish* f, int cell,
                                  fishbij_fish** out) {
  if (f == nullptr) return null_arg("fish");
  if (out == nullptr) return null_arg("out");
  return guarded(
      [&] { *out = new fishbij_fish{fishbij::glue_lower(f->value, cell)}; });
}

fishbij_status fishbij_glue_double(const fishbij_fish* f, int a, int b,
                                   fishbij_fish** out) {
  if (f == nullptr) return null_arg("fish");
  if (out == nullptr) return null_arg("out");
  return guarded(
      [&] { *out = new fishbij_fish{fishbij::glue_double(f->value, a, b)}; });
}

fishbij_status fishbij_conjugate(const fishbij_fish* f, fishbij_fish** out) {
  if (f == nullptr) return null_arg("fish");
  if (out == nullptr) return null_arg("out");
  return guarded(
      [&] { *out = new fishbij_fish{fishbij::conjugate(f->value)}; });
}

fishbij_status fishbij_is_symmetric(const fishbij_fish* f, int* out) {
  if (f == nullptr) return null_arg("fish");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = fishbij::is_symmetric(f->value) ? 1 : 0; });
}

fishbij_status fishbij_tree_parse(const char* code, fishbij_tree** out) {
  if (code == nullptr) return null_arg("code");
  if (out == nullptr) return null_arg("out");
  return guarded(
      [&] { *out = new fishbij_tree{fishbij::parse_tree(code)}; });
}

void fishbij_tree_free(fishbij_tree* t) { delete t; }

fishbij_status fishbij_tree_code(const fishbij_tree* t, char** out) {
  if (t == nullptr) return null_arg("tree");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = dup_string(fishbij::tree_code(t->value)); });
}

fishbij_status fishbij_tree_json(const fishbij_tree* t, char** out) {
  if (t == nullptr) return null_arg("tree");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = dup_string(fishbij::tree_json(t->value)); });
}

fishbij_status fishbij_tree_nodes(const fishbij_tree* t, int* out) {
  if (t == nullptr) return null_arg("tree");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = t->value.node_count(); });
}

fishbij_status fishbij_tree_statistic(const fishbij_tree* t, const char* name,
                                      long long* out) {
  if (t == nullptr) return null_arg("tree");
  if (name == nullptr) return null_arg("name");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = fishbij::tree_statistic(t->value, name); });
}

fishbij_status fishbij_map_tree_to_fish(const fishbij_tree* t,
                                        fishbij_fish** out) {
  if (t == nullptr) return null_arg("tree");
  if (out == nullptr) return null_arg("out");
  return guarded(
      [&] { *out = new fishbij_fish{fishbij::phi_left(t->value)}; });
}

fishbij_status fishbij_map_fish_to_tree(const fishbij_fish* f,
                                        fishbij_tree** out) {
  if (f == nullptr) return null_arg("fish");
  if (out == nullptr) return null_arg("out");
  return guarded(
      [&] { *out = new fishbij_tree{fishbij::phi_left_inv(f->value)}; });
}

fishbij_status fishbij_map_tree_to_marked(const fishbij_tree* t,
                                          fishbij_fish** out_fish,
                                          int* out_strip) {
  if (t == nullptr) return null_arg("tree");
  if (out_fish == nullptr) return null_arg("out_fish");
  if (out_strip == nullptr) return null_arg("out_strip");
  return guarded([&] {
    fishbij::MarkedFish m = fishbij::phi(t->value);
    *out_fish = new fishbij_fish{std::move(m.fish)};
    *out_strip = m.strip;
  });
}

fishbij_status fishbij_map_marked_to_tree(const fishbij_fish* f, int strip,
                                          fishbij_tree** out) {
  if (f == nullptr) return null_arg("fish");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    fishbij::MarkedFish m{f->value, strip};
    *out = new fishbij_tree{fishbij::phi_inv(m)};
  });
}

fishbij_status fishbij_map_tails_to_pair(const fishbij_fish* f, int tail,
                                         fishbij_tree** out_first,
                                         fishbij_tree** out_second) {
  if (f == nullptr) return null_arg("fish");
  if (out_first == nullptr) return null_arg("out_first");
  if (out_second == nullptr) return null_arg("out_second");
  return guarded([&] {
    fishbij::TreePair p = fishbij::tails_to_pair(f->value, tail);
    *out_first = new fishbij_tree{std::move(p.first)};
    *out_second = new fishbij_tree{std::move(p.second)};
  });
}

fishbij_status fishbij_map_pair_to_fish(const fishbij_tree* first,
                                        const fishbij_tree* second,
                                        fishbij_fish** out, int* out_tail) {
  if (first == nullptr) return null_arg("first");
  if (second == nullptr) return null_arg("second");
  if (out == nullptr) return null_arg("out");
  if (out_tail == nullptr) return null_arg("out_tail");
  return guarded([&] {
    fishbij::TailedFish tf =
        fishbij::pair_to_tailed_fish({first->value, second->value});
    *out = new fishbij_fish{std::move(tf.fish)};
    *out_tail = tf.tail;
  });
}

fishbij_status fishbij_map_symmetric_to_pair(const fishbij_fish* f,
                                             fishbij_tree** out_first,
                                             fishbij_tree** out_second) {
  if (f == nullptr) return null_arg("fish");
  if (out_first == nullptr) return null_arg("out_first");
  if (out_second == nullptr) return null_arg("out_second");
  return guarded([&] {
    fishbij::TreePair p = fishbij::symmetric_to_pair(f->value);
    *out_first = new fishbij_tree{std::move(p.first)};
    *out_second = new fishbij_tree{std::move(p.second)};
  });
}

fishbij_status fishbij_map_pair_to_symmetric(const fishbij_tree* first,
                                             const fishbij_tree* second,
                                             fishbij_fish** out) {
  if (first == nullptr) return null_arg("first");
  if (second == nullptr) return null_arg("second");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    *out = new fishbij_fish{
        fishbij::pair_to_symmetric({first->value, second->value})};
  });
}

fishbij_status fishbij_count(const char* family, int n, char** out) {
  if (family == nullptr) return null_arg("family");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    std::string fam = family;
    fishbij::BigCount v;
    if (fam == "fish") {
      v = fishbij::count_fish(n);
    } else if (fam == "ternary") {
      v = fishbij::count_ternary(n);
    } else if (fam == "left") {
      v = fishbij::count_left(n);
    } else if (fam == "pairs") {
      v = fishbij::count_pairs(n);
    } else if (fam == "symmetric") {
      v = fishbij::count_symmetric_of_size(n);
    } else if (fam == "symmetric-odd") {
      v = fishbij::count_symmetric_odd_tails_of_size(n);
    } else if (fam == "symmetric-even") {
      v = fishbij::count_symmetric_even_tails_of_size(n);
    } else {
      fishbij::fail(fishbij::ErrorKind::Range,
                    "unknown count family \"" + fam + "\"");
    }
    *out = dup_string(v.str());
  });
}

fishbij_status fishbij_census_csv(const char* family, int n,
                                  const char* const* statistics,
                                  size_t statistic_count, const char* method,
                                  int workers, char** out) {
  if (family == nullptr) return null_arg("family");
  if (statistics == nullptr && statistic_count > 0)
    return null_arg("statistics");
  if (method == nullptr) return null_arg("method");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    std::vector<std::string> names;
    names.reserve(statistic_count);
    for (size_t i = 0; i < statistic_count; ++i) {
      if (statistics[i] == nullptr)
        fishbij::fail(fishbij::ErrorKind::Range, "null statistic name");
      names.emplace_back(statistics[i]);
    }
    fishbij::Census c = fishbij::census(parse_family(family), n, names,
                                        parse_method(method), workers);
    *out = dup_string(c.to_csv());
  });
}

fishbij_status fishbij_g_polynomial(int n, char** out) {
  if (out == nullptr) return null_arg("out");
  return guarded(
      [&] { *out = dup_string(fishbij::g_polynomial(n).to_string()); });
}

fishbij_status fishbij_verify(const char* suite, int nmax, int workers,
                              int* out_pass, char** out_report) {
  if (suite == nullptr) return null_arg("suite");
  if (out_pass == nullptr) return null_arg("out_pass");
  if (out_report == nullptr) return null_arg("out_report");
  return guarded([&] {
    fishbij::VerifyResult r = fishbij::run_suite(suite, nmax, workers);
    *out_pass = r.pass ? 1 : 0;
    *out_report = dup_string(r.text());
  });
}

fishbij_status fishbij_conjecture(int nmax, int workers,
                                  int* out_corrected_equal, int* out_raw_equal,
                                  char** out_report) {
  if (out_corrected_equal == nullptr) return null_arg("out_corrected_equal");
  if (out_raw_equal == nullptr) return null_arg("out_raw_equal");
  if (out_report == nullptr) return null_arg("out_report");
  return guarded([&] {
    fishbij::ConjectureReport rep = fishbij::conjecture_diff(nmax, workers);
    *out_corrected_equal = rep.corrected_equal ? 1 : 0;
    *out_raw_equal = rep.raw_equal ? 1 : 0;
    *out_report = dup_string(rep.text);
  });
}

fishbij_status fishbij_render_fish_svg(const fishbij_fish* f, char** out) {
  if (f == nullptr) return null_arg("fish");
  if (out == nullptr) return null_arg("out");
  return guarded(
      [&] { *out = dup_string(fishbij::render_fish_svg(f->value)); });
}

fishbij_status fishbij_render_tree_svg(const fishbij_tree* t, char** out) {
  if (t == nullptr) return null_arg("tree");
  if (out == nullptr) return null_arg("out");
  return guarded(
      [&] { *out = dup_string(fishbij::render_tree_svg(t->value)); });
}

}  // extern "C"
