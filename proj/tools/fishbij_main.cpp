#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fishbij.h"
#include "json.hpp"

// Command-line front end.  Talks to the library exclusively through the C
// interface in fishbij.h.  Exit codes: 0 success / all checks pass, 1
// verification failure, 2 usage or input parse problem, 3 domain
// precondition violation.

namespace {

using nlohmann::ordered_json;

struct CliError {
  int code;
  std::string message;
};

int exit_code_for(fishbij_status s) {
  switch (s) {
    case FISHBIJ_OK:
      return 0;
    case FISHBIJ_E_PARSE:
    case FISHBIJ_E_IO:
      return 2;
    default:
      return 3;
  }
}

void check(fishbij_status s) {
  if (s == FISHBIJ_OK) return;
  throw CliError{exit_code_for(s), std::string(fishbij_status_name(s)) + ": " +
                                       fishbij_last_error()};
}

struct CStr {
  char* p = nullptr;
  ~CStr() { fishbij_string_free(p); }
  std::string str() const { return p == nullptr ? std::string() : p; }
};

struct FishHandle {
  fishbij_fish* p = nullptr;
  ~FishHandle() { fishbij_fish_free(p); }
};

struct TreeHandle {
  fishbij_tree* p = nullptr;
  ~TreeHandle() { fishbij_tree_free(p); }
};

// Object arguments: "@path" reads a file, "-" reads stdin, anything else is
// taken literally.
std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1), std::ios::binary);
    if (!in) throw CliError{2, "cannot read file: " + arg.substr(1)};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  return arg;
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{2, "cannot write file: " + path};
  out << data;
  out.close();
  if (!out) throw CliError{2, "write failed: " + path};
}

int parse_int_arg(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    throw CliError{2, std::string("expected an integer ") + what + ", got \"" +
                          s + "\""};
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct CountOpts {
  std::string family;
  int n = 0;
  std::string format = "text";
};

int run_count(const CountOpts& o) {
  int least = (o.family == "ternary" || o.family == "pairs") ? 0 : 1;
  if (o.n < least)
    throw CliError{2, "count " + o.family + " requires n >= " +
                          std::to_string(least)};
  CStr value;
  check(fishbij_count(o.family.c_str(), o.n, &value.p));
  if (o.format == "json") {
    ordered_json j;
    j["family"] = o.family;
    j["n"] = o.n;
    j["count"] = value.str();
    std::cout << j.dump() << "\n";
  } else if (o.format == "csv") {
    std::cout << "count\n" << value.str() << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
  return 0;
}

struct MapOpts {
  std::string direction;
  std::vector<std::string> args;
  std::string format = "text";
};

void need_args(const MapOpts& o, std::size_t n, const char* shape) {
  if (o.args.size() != n)
    throw CliError{2, "map " + o.direction + " expects " + shape};
}

int run_map(const MapOpts& o) {
  bool as_json = o.format == "json";
  ordered_json j;
  std::string text;
  if (o.direction == "tree-to-fish") {
    need_args(o, 1, "one tree code");
    TreeHandle t;
    check(fishbij_tree_parse(read_input(o.args[0]).c_str(), &t.p));
    FishHandle f;
    check(fishbij_map_tree_to_fish(t.p, &f.p));
    CStr out;
    check(fishbij_fish_json(f.p, &out.p));
    text = out.str() + "\n";
    if (as_json) j["fish"] = ordered_json::parse(out.str());
  } else if (o.direction == "fish-to-tree") {
    need_args(o, 1, "one fish JSON object");
    FishHandle f;
    check(fishbij_fish_parse(read_input(o.args[0]).c_str(), &f.p));
    TreeHandle t;
    check(fishbij_map_fish_to_tree(f.p, &t.p));
    CStr out;
    check(fishbij_tree_code(t.p, &out.p));
    text = out.str() + "\n";
    if (as_json) j["tree"] = out.str();
  } else if (o.direction == "tree-to-marked") {
    need_args(o, 1, "one tree code");
    TreeHandle t;
    check(fishbij_tree_parse(read_input(o.args[0]).c_str(), &t.p));
    FishHandle f;
    int strip = 0;
    check(fishbij_map_tree_to_marked(t.p, &f.p, &strip));
    CStr out;
    check(fishbij_fish_json(f.p, &out.p));
    text = out.str() + "\n" + std::to_string(strip) + "\n";
    if (as_json) {
      j["fish"] = ordered_json::parse(out.str());
      j["strip"] = strip;
    }
  } else if (o.direction == "marked-to-tree") {
    need_args(o, 2, "a fish JSON object and a strip index");
    FishHandle f;
    check(fishbij_fish_parse(read_input(o.args[0]).c_str(), &f.p));
    int strip = parse_int_arg(o.args[1], "strip index");
    TreeHandle t;
    check(fishbij_map_marked_to_tree(f.p, strip, &t.p));
    CStr out;
    check(fishbij_tree_code(t.p, &out.p));
    text = out.str() + "\n";
    if (as_json) j["tree"] = out.str();
  } else if (o.direction == "tails-to-pair") {
    need_args(o, 2, "a fish JSON object and a tail cell id");
    FishHandle f;
    check(fishbij_fish_parse(read_input(o.args[0]).c_str(), &f.p));
    int tail = parse_int_arg(o.args[1], "tail cell id");
    TreeHandle a, b;
    check(fishbij_map_tails_to_pair(f.p, tail, &a.p, &b.p));
    CStr ca, cb;
    check(fishbij_tree_code(a.p, &ca.p));
    check(fishbij_tree_code(b.p, &cb.p));
    text = ca.str() + "\n" + cb.str() + "\n";
    if (as_json) {
      j["first"] = ca.str();
      j["second"] = cb.str();
    }
  } else {  // pair-to-fish
    need_args(o, 2, "two tree codes");
    TreeHandle a, b;
    check(fishbij_tree_parse(read_input(o.args[0]).c_str(), &a.p));
    check(fishbij_tree_parse(read_input(o.args[1]).c_str(), &b.p));
    FishHandle f;
    int tail = 0;
    check(fishbij_map_pair_to_fish(a.p, b.p, &f.p, &tail));
    CStr out;
    check(fishbij_fish_json(f.p, &out.p));
    text = out.str() + "\n" + std::to_string(tail) + "\n";
    if (as_json) {
      j["fish"] = ordered_json::parse(out.str());
      j["tail"] = tail;
    }
  }
  if (as_json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
  return 0;
}

struct VerifyOpts {
  std::string suite;
  int nmax = 6;
  int workers = 1;
  std::string out;
};

int run_verify(const VerifyOpts& o) {
  int pass = 0;
  CStr report;
  check(fishbij_verify(o.suite.c_str(), o.nmax, o.workers, &pass, &report.p));
  write_output(o.out, report.str());
  return pass == 1 ? 0 : 1;
}

struct ConjectureOpts {
  int nmax = 5;
  int workers = 1;
  std::string out;
};

int run_conjecture(const ConjectureOpts& o) {
  int corrected = 0, raw = 0;
  CStr report;
  check(fishbij_conjecture(o.nmax, o.workers, &corrected, &raw, &report.p));
  write_output(o.out, report.str());
  return 0;  // exploratory: a difference is a finding, not a failure
}

struct RenderOpts {
  std::string object;
  std::string out;
};

int run_render(const RenderOpts& o) {
  std::string input = read_input(o.object);
  std::size_t i = input.find_first_not_of(" \t\r\n");
  CStr svg;
  if (i != std::string::npos && input[i] == '{') {
    FishHandle f;
    check(fishbij_fish_parse(input.c_str(), &f.p));
    check(fishbij_render_fish_svg(f.p, &svg.p));
  } else {
    TreeHandle t;
    check(fishbij_tree_parse(input.c_str(), &t.p));
    check(fishbij_render_tree_svg(t.p, &svg.p));
  }
  write_output(o.out, svg.str());
  return 0;
}

struct CensusOpts {
  std::string family;
  int n = 0;
  std::vector<std::string> statistics;
  std::string method = "via-left-trees";
  int workers = 1;
  std::string format = "csv";
  std::string out;
};

int run_census(const CensusOpts& o) {
  int least = o.family == "ternary" ? 0 : 1;
  if (o.n < least)
    throw CliError{2, "census " + o.family + " requires n >= " +
                          std::to_string(least)};
  std::vector<const char*> names;
  names.reserve(o.statistics.size());
  for (const std::string& s : o.statistics) names.push_back(s.c_str());
  CStr csv;
  check(fishbij_census_csv(o.family.c_str(), o.n, names.data(), names.size(),
                           o.method.c_str(), o.workers, &csv.p));
  if (o.format != "json") {
    write_output(o.out, csv.str());
    return 0;
  }
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  ordered_json rows = ordered_json::array();
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells = split(line, ',');
    ordered_json row;
    ordered_json key = ordered_json::array();
    for (std::size_t i = 0; i + 1 < cells.size(); ++i)
      key.push_back(std::stoll(cells[i]));
    row["key"] = key;
    row["count"] = cells.back();
    rows.push_back(row);
  }
  ordered_json j;
  j["family"] = o.family;
  j["n"] = o.n;
  j["statistics"] = o.statistics;
  j["rows"] = rows;
  write_output(o.out, j.dump() + "\n");
  return 0;
}

template <typename Fn, typename Opts>
void run_command(int& rc, Fn fn, const Opts& opts) {
  try {
    rc = fn(opts);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    rc = e.code;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Fighting fish and ternary trees: exact counting, bijections, "
      "verification suites, censuses, and SVG rendering"};
  app.set_version_flag("--version", fishbij_version());
  app.require_subcommand(1);
  int rc = 0;

  CountOpts count_opts;
  CLI::App* count_cmd =
      app.add_subcommand("count", "Closed-form counts (exact big integers)");
  count_cmd
      ->add_option("family", count_opts.family,
                   "fish | ternary | left | pairs | symmetric | symmetric-odd "
                   "| symmetric-even (symmetric families are size-addressed)")
      ->required()
      ->check(CLI::IsMember({"fish", "ternary", "left", "pairs", "symmetric",
                             "symmetric-odd", "symmetric-even"}));
  count_cmd->add_option("n", count_opts.n, "size (fish/left >= 1, trees/pairs >= 0)")
      ->required()
      ->check(CLI::Range(0, 100000));
  count_cmd->add_option("--format", count_opts.format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  count_cmd->callback([&] { run_command(rc, run_count, count_opts); });

  MapOpts map_opts;
  CLI::App* map_cmd = app.add_subcommand(
      "map", "Apply a bijection (objects: tree codes, fish JSON, @file, -)");
  map_cmd
      ->add_option("direction", map_opts.direction,
                   "tree-to-fish | fish-to-tree | tree-to-marked | "
                   "marked-to-tree | tails-to-pair | pair-to-fish")
      ->required()
      ->check(CLI::IsMember({"tree-to-fish", "fish-to-tree", "tree-to-marked",
                             "marked-to-tree", "tails-to-pair",
                             "pair-to-fish"}));
  map_cmd->add_option("args", map_opts.args, "objects for the direction")
      ->expected(1, 2);
  map_cmd->add_option("--format", map_opts.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  map_cmd->callback([&] { run_command(rc, run_map, map_opts); });

  VerifyOpts verify_opts;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Exhaustive verification suites (exit 1 on any FAIL)");
  verify_cmd
      ->add_option("suite", verify_opts.suite,
                   "lemma2 | thm1 | thm2 | thm3 | tails | symmetric | "
                   "lefttrees | oracle | qpoly | all")
      ->required()
      ->check(CLI::IsMember({"lemma2", "thm1", "thm2", "thm3", "tails",
                             "symmetric", "lefttrees", "oracle", "qpoly",
                             "all"}));
  verify_cmd
      ->add_option("nmax,--nmax", verify_opts.nmax,
                   "largest size checked (default 6)")
      ->check(CLI::Range(1, 10));
  verify_cmd->add_option("--parallel", verify_opts.workers, "worker threads")
      ->check(CLI::Range(1, 256));
  verify_cmd->add_option("--out", verify_opts.out, "write the report here");
  verify_cmd->callback([&] { run_command(rc, run_verify, verify_opts); });

  RenderOpts render_opts;
  CLI::App* render_cmd = app.add_subcommand(
      "render", "SVG diagram of a fish (JSON) or a ternary tree (code)");
  render_cmd->add_option("object", render_opts.object, "fish JSON | tree code | @file | -")
      ->required();
  render_cmd->add_option("--out", render_opts.out, "output path (default stdout)");
  render_cmd->callback([&] { run_command(rc, run_render, render_opts); });

  ConjectureOpts conj_opts;
  CLI::App* conj_cmd = app.add_subcommand(
      "conjecture",
      "Fin/core census comparison between fish and left trees (always exit 0)");
  conj_cmd
      ->add_option("nmax,--nmax", conj_opts.nmax,
                   "largest size compared (default 5)")
      ->check(CLI::Range(1, 7));
  conj_cmd->add_option("--parallel", conj_opts.workers, "worker threads")
      ->check(CLI::Range(1, 256));
  conj_cmd->add_option("--out", conj_opts.out, "write the report here");
  conj_cmd->callback([&] { run_command(rc, run_conjecture, conj_opts); });

  CensusOpts census_opts;
  CLI::App* census_cmd = app.add_subcommand(
      "census", "Joint distribution of statistics over an enumerated family");
  census_cmd
      ->add_option("family", census_opts.family,
                   "fish | left | ternary | marked | symmetric")
      ->required()
      ->check(CLI::IsMember({"fish", "left", "ternary", "marked", "symmetric"}));
  census_cmd->add_option("n", census_opts.n, "size")
      ->required()
      ->check(CLI::Range(0, 100000));
  census_cmd
      ->add_option("statistics", census_opts.statistics,
                   "statistic names from the registry")
      ->required()
      ->expected(1, 8);
  census_cmd
      ->add_option("--method", census_opts.method,
                   "fish generation: via-left-trees | oracle")
      ->check(CLI::IsMember({"via-left-trees", "oracle"}));
  census_cmd->add_option("--parallel", census_opts.workers, "worker threads")
      ->check(CLI::Range(1, 256));
  census_cmd->add_option("--format", census_opts.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  census_cmd->add_option("--out", census_opts.out, "output path (default stdout)");
  census_cmd->callback([&] { run_command(rc, run_census, census_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
