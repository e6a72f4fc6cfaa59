#include "fishbij/fish.hpp"

#include <algorithm>
#include <set>
#include <string>

#include <json.hpp>

#include "fishbij/bijection.hpp"  // reconstruction check in from_json

namespace fishbij {

namespace {

// Counterclockwise edge cycle of a cell: ll (left->bottom), rl (bottom->right),
// ru (right->top), lu (top->left).
EdgeSlot ccw_next(EdgeSlot s) {
  switch (s) {
    case LL: return RL;
    case RL: return RU;
    case RU: return LU;
    case LU: return LL;
  }
  return LL;
}

// Slot on the far side of a gluing: c.ru = d pairs with d.ll = c, etc.
EdgeSlot mate(EdgeSlot s) {
  switch (s) {
    case RU: return LL;
    case LL: return RU;
    case RL: return LU;
    case LU: return RL;
  }
  return RU;
}

}  // namespace

CellId Cell::get(EdgeSlot s) const {
  switch (s) {
    case RU: return ru;
    case RL: return rl;
    case LU: return lu;
    case LL: return ll;
  }
  return -1;
}

void Cell::set(EdgeSlot s, CellId v) {
  switch (s) {
    case RU: ru = v; break;
    case RL: rl = v; break;
    case LU: lu = v; break;
    case LL: ll = v; break;
  }
}

void RawComplex::glue(CellId a, EdgeSlot s, CellId b) {
  if (cells[a].get(s) >= 0 || cells[b].get(mate(s)) >= 0)
    fail(ErrorKind::EdgeOccupied, "edge already glued");
  cells[a].set(s, b);
  cells[b].set(mate(s), a);
}

Fish Fish::head_fish() {
  Fish f;
  f.cells_.push_back(Cell{});
  f.coords_.push_back({0, 0});
  return f;
}

Fish Fish::canonicalize(const RawComplex& raw) {
  return canonicalize(raw, nullptr);
}

Fish Fish::canonicalize(const RawComplex& raw, std::vector<CellId>* perm) {
  const int n = static_cast<int>(raw.cells.size());
  if (n == 0) fail(ErrorKind::InvalidFish, "empty complex");

  // Mutual link consistency.
  for (int i = 0; i < n; ++i) {
    for (EdgeSlot s : {RU, RL, LU, LL}) {
      CellId j = raw.cells[i].get(s);
      if (j < 0) continue;
      if (j >= n || j == i)
        fail(ErrorKind::InvalidFish, "bad gluing target");
      if (raw.cells[j].get(mate(s)) != i)
        fail(ErrorKind::InvalidFish, "gluing not mutual");
    }
  }

  // Unique head: exactly one cell with both left edges free.
  CellId head = -1;
  for (int i = 0; i < n; ++i) {
    if (raw.cells[i].lu < 0 && raw.cells[i].ll < 0) {
      if (head >= 0) fail(ErrorKind::InvalidFish, "two head candidates");
      head = i;
    }
  }
  if (head < 0) fail(ErrorKind::InvalidFish, "no head");

  // Head-seeded BFS with fixed neighbor order; also derives coordinates and
  // checks that they are path-independent and nonnegative.
  std::vector<CellId> order;
  std::vector<CellId> to_new(n, -1);
  std::vector<std::pair<int, int>> coord(n, {0, 0});
  to_new[head] = 0;
  order.push_back(head);
  static const std::pair<int, int> delta[4] = {{0, 1}, {1, 0}, {-1, 0}, {0, -1}};
  for (size_t qi = 0; qi < order.size(); ++qi) {
    CellId c = order[qi];
    for (EdgeSlot s : {RU, RL, LU, LL}) {
      CellId d = raw.cells[c].get(s);
      if (d < 0) continue;
      std::pair<int, int> want = {coord[c].first + delta[s].first,
                                  coord[c].second + delta[s].second};
      if (to_new[d] < 0) {
        to_new[d] = static_cast<CellId>(order.size());
        coord[d] = want;
        if (want.first < 0 || want.second < 0)
          fail(ErrorKind::InvalidFish, "cell left of the head");
        order.push_back(d);
      } else if (coord[d] != want) {
        fail(ErrorKind::InvalidFish, "coordinates not path-independent");
      }
    }
  }
  if (static_cast<int>(order.size()) != n)
    fail(ErrorKind::InvalidFish, "complex not connected");

  int free_left = 0, free_right = 0;
  for (int i = 0; i < n; ++i) {
    free_right += (raw.cells[i].ru < 0) + (raw.cells[i].rl < 0);
    free_left += (raw.cells[i].lu < 0) + (raw.cells[i].ll < 0);
  }
  if (free_left != free_right)
    fail(ErrorKind::InvalidFish, "free edge counts differ");

  Fish f;
  f.cells_.resize(n);
  f.coords_.resize(n);
  for (int i = 0; i < n; ++i) {
    CellId old = order[i];
    for (EdgeSlot s : {RU, RL, LU, LL}) {
      CellId d = raw.cells[old].get(s);
      f.cells_[i].set(s, d < 0 ? -1 : to_new[d]);
    }
    f.coords_[i] = coord[old];
  }
  if (perm) *perm = to_new;
  return f;
}

const Cell& Fish::cell(CellId c) const {
  if (c < 0 || c >= cell_count()) fail(ErrorKind::BadCell, "cell id out of range");
  return cells_[c];
}

std::pair<int, int> Fish::coord(CellId c) const {
  if (c < 0 || c >= cell_count()) fail(ErrorKind::BadCell, "cell id out of range");
  return coords_[c];
}

int Fish::size() const {
  int free_right = 0;
  for (const Cell& c : cells_) free_right += (c.ru < 0) + (c.rl < 0);
  return free_right - 1;
}

std::string Fish::to_json() const {
  std::string out = "{\"cells\":[";
  auto num = [](CellId v) {
    return v < 0 ? std::string("null") : std::to_string(v);
  };
  for (size_t i = 0; i < cells_.size(); ++i) {
    if (i) out += ',';
    const Cell& c = cells_[i];
    out += "{\"ru\":" + num(c.ru) + ",\"rl\":" + num(c.rl) +
           ",\"lu\":" + num(c.lu) + ",\"ll\":" + num(c.ll) + "}";
  }
  out += "]}";
  return out;
}

const std::string& Fish::code() const {
  if (code_.empty()) code_ = to_json();
  return code_;
}

Fish Fish::from_json(const std::string& json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("fish JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array())
    fail(ErrorKind::ParseError, "fish JSON: expected {\"cells\":[...]}");
  RawComplex raw;
  for (const auto& item : doc["cells"]) {
    if (!item.is_object())
      fail(ErrorKind::ParseError, "fish JSON: cell entries must be objects");
    Cell cell;
    static const char* keys[4] = {"ru", "rl", "lu", "ll"};
    for (int s = 0; s < 4; ++s) {
      if (!item.contains(keys[s]))
        fail(ErrorKind::ParseError,
             std::string("fish JSON: cell missing key \"") + keys[s] + "\"");
      const auto& v = item[keys[s]];
      if (v.is_null()) continue;
      if (!v.is_number_integer())
        fail(ErrorKind::ParseError,
             std::string("fish JSON: key \"") + keys[s] + "\" must be int or null");
      cell.set(static_cast<EdgeSlot>(s), v.get<int>());
    }
    for (auto it = item.begin(); it != item.end(); ++it) {
      if (std::string(it.key()) != "ru" && it.key() != "rl" &&
          it.key() != "lu" && it.key() != "ll")
        fail(ErrorKind::ParseError, "fish JSON: unknown cell key \"" + it.key() + "\"");
    }
    raw.cells.push_back(cell);
  }
  for (const Cell& c : raw.cells)
    for (EdgeSlot s : {RU, RL, LU, LL})
      if (c.get(s) >= static_cast<CellId>(raw.cells.size()) || c.get(s) < -1)
        fail(ErrorKind::ParseError, "fish JSON: cell index out of range");

  Fish f = canonicalize(raw);
  // Constructibility: a valid fighting fish is rebuilt exactly from its stem
  // tree; anything merely locally consistent is rejected here.
  try {
    if (build_fish(stem_tree(f, jaw(f))).fish != f)
      fail(ErrorKind::InvalidFish, "not a fighting fish");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidFish) throw;
    fail(ErrorKind::InvalidFish,
         std::string("not a fighting fish (") + e.what() + ")");
  }
  return f;
}

// --- Growth ------------------------------------------------------------------

namespace {

RawComplex to_raw(const Fish& f) {
  RawComplex raw;
  raw.cells = f.cells();
  return raw;
}

GrowResult finish(RawComplex& raw, CellId raw_new) {
  std::vector<CellId> perm;
  GrowResult r{Fish::canonicalize(raw, &perm), perm[raw_new]};
  return r;
}

}  // namespace

GrowResult glue_upper_tracked(const Fish& f, CellId c) {
  const Cell& cc = f.cell(c);
  if (cc.ru >= 0) fail(ErrorKind::EdgeOccupied, "right upper edge is glued");
  RawComplex raw = to_raw(f);
  CellId d = raw.add_cell();
  raw.glue(c, RU, d);
  return finish(raw, d);
}

GrowResult glue_lower_tracked(const Fish& f, CellId c) {
  const Cell& cc = f.cell(c);
  if (cc.rl >= 0) fail(ErrorKind::EdgeOccupied, "right lower edge is glued");
  RawComplex raw = to_raw(f);
  CellId d = raw.add_cell();
  raw.glue(c, RL, d);
  return finish(raw, d);
}

GrowResult glue_double_tracked(const Fish& f, CellId a, CellId b) {
  const Cell& ca = f.cell(a);
  const Cell& cb = f.cell(b);
  // The site: some cell c carries a on its ru edge and b on its rl edge.
  CellId c = ca.ll;
  if (c < 0 || cb.lu != c)
    fail(ErrorKind::NotDoubleSite, "cells are not carried by a common cell");
  if (ca.rl >= 0) fail(ErrorKind::NotDoubleSite, "upper cell has no free right lower edge");
  if (cb.ru >= 0) fail(ErrorKind::NotDoubleSite, "lower cell has no free right upper edge");
  RawComplex raw = to_raw(f);
  CellId d = raw.add_cell();
  raw.glue(a, RL, d);
  raw.glue(b, RU, d);
  return finish(raw, d);
}

Fish glue_upper(const Fish& f, CellId c) { return glue_upper_tracked(f, c).fish; }
Fish glue_lower(const Fish& f, CellId c) { return glue_lower_tracked(f, c).fish; }
Fish glue_double(const Fish& f, CellId a, CellId b) {
  return glue_double_tracked(f, a, b).fish;
}

// --- Strips ------------------------------------------------------------------

std::vector<StripRef> strips(const Fish& f, Orientation o) {
  std::vector<StripRef> out;
  const int n = f.cell_count();
  for (CellId c = 0; c < n; ++c) {
    if (o == Orientation::Descending) {
      if (f.cells()[c].lu >= 0) continue;  // not a top cell
      StripRef strip{o, {}};
      for (CellId x = c; x >= 0; x = f.cells()[x].rl) strip.cells.push_back(x);
      out.push_back(std::move(strip));
    } else {
      if (f.cells()[c].ll >= 0) continue;  // not a bottom cell
      StripRef strip{o, {}};
      for (CellId x = c; x >= 0; x = f.cells()[x].ru) strip.cells.push_back(x);
      out.push_back(std::move(strip));
    }
  }
  return out;
}

StripRef jaw(const Fish& f) {
  StripRef strip{Orientation::Descending, {}};
  for (CellId x = f.head(); x >= 0; x = f.cells()[x].rl) strip.cells.push_back(x);
  return strip;
}

int descending_strip_index_of(const Fish& f, CellId c) {
  f.cell(c);  // range check
  CellId top = c;
  while (f.cells()[top].lu >= 0) top = f.cells()[top].lu;
  int index = 0;
  for (CellId x = 0; x < top; ++x)
    if (f.cells()[x].lu < 0) ++index;
  return index;
}

// --- Stem cells --------------------------------------------------------------

namespace {

// Rotates around the start vertex of slot `s0` of cell `c0` through glued
// corners.  Returns true iff a free slot is reached before coming back (the
// corner fan is a path, so the vertex lies on the boundary of this fan).
bool fan_is_path(const Fish& f, CellId c0, EdgeSlot s0) {
  CellId c = c0;
  EdgeSlot s = s0;
  int guard = 4 * f.cell_count() + 4;
  while (guard-- > 0) {
    CellId d = f.cells()[c].get(s);
    if (d < 0) return true;
    s = ccw_next(mate(s));
    c = d;
    if (c == c0 && s == s0) return false;
  }
  fail(ErrorKind::Internal, "fan rotation did not terminate");
}

}  // namespace

std::vector<CellKind> classify_cells(const Fish& f) {
  std::vector<CellKind> out(f.cell_count());
  for (CellId c = 0; c < f.cell_count(); ++c) {
    const Cell& cc = f.cells()[c];
    CellKind& k = out[c];
    k.tail = (cc.ru < 0 && cc.rl < 0);
    if (cc.ru < 0 || cc.rl < 0) {
      k.stem = true;
    } else {
      // Both right edges glued: branch cell iff the corner fan at the right
      // point is a path (its two free end edges meet at that point).
      k.branch = fan_is_path(f, c, RU);
      k.stem = k.branch;
    }
  }
  return out;
}

std::vector<CellId> stem_cells(const Fish& f) {
  std::vector<CellId> out;
  std::vector<CellKind> kinds = classify_cells(f);
  for (CellId c = 0; c < f.cell_count(); ++c)
    if (kinds[c].stem) out.push_back(c);
  return out;
}

std::vector<CellId> tails(const Fish& f) {
  std::vector<CellId> out;
  for (CellId c = 0; c < f.cell_count(); ++c)
    if (f.cells()[c].ru < 0 && f.cells()[c].rl < 0) out.push_back(c);
  return out;
}

std::vector<CellId> branch_cells(const Fish& f) {
  std::vector<CellId> out;
  std::vector<CellKind> kinds = classify_cells(f);
  for (CellId c = 0; c < f.cell_count(); ++c)
    if (kinds[c].branch) out.push_back(c);
  return out;
}

bool is_tail(const Fish& f, CellId c) {
  const Cell& cc = f.cell(c);
  return cc.ru < 0 && cc.rl < 0;
}

// --- Conjugation -------------------------------------------------------------

Fish conjugate_mapped(const Fish& f, std::vector<CellId>* map) {
  RawComplex raw;
  raw.cells.resize(f.cell_count());
  for (CellId c = 0; c < f.cell_count(); ++c) {
    const Cell& cc = f.cells()[c];
    raw.cells[c].ru = cc.rl;
    raw.cells[c].rl = cc.ru;
    raw.cells[c].lu = cc.ll;
    raw.cells[c].ll = cc.lu;
  }
  return Fish::canonicalize(raw, map);
}

Fish conjugate(const Fish& f) { return conjugate_mapped(f, nullptr); }

bool is_symmetric(const Fish& f) { return conjugate(f) == f; }

// --- Fin ---------------------------------------------------------------------

std::pair<CellId, EdgeSlot> boundary_next(const Fish& f, CellId c, EdgeSlot s) {
  // The traversed edge ends at the start vertex of the next candidate slot in
  // the cell's ccw cycle; rotate through glued corners until a free slot.
  EdgeSlot cand = ccw_next(s);
  CellId cur = c;
  int guard = 4 * f.cell_count() + 4;
  while (guard-- > 0) {
    CellId d = f.cells()[cur].get(cand);
    if (d < 0) return {cur, cand};
    cand = ccw_next(mate(cand));
    cur = d;
  }
  fail(ErrorKind::Internal, "boundary rotation did not terminate");
}

namespace {

template <typename Visit>
void walk_fin(const Fish& f, Visit&& visit) {
  CellId c = f.head();
  EdgeSlot s = LL;
  int guard = 4 * f.cell_count() + 4;
  while (guard-- > 0) {
    visit(c, s);
    if (s == RL && f.cells()[c].ru < 0) return;  // reached a tail's right point
    auto [nc, ns] = boundary_next(f, c, s);
    c = nc;
    s = ns;
  }
  fail(ErrorKind::Internal, "fin walk did not terminate");
}

}  // namespace

int fin_length(const Fish& f) {
  int edges = 0;
  walk_fin(f, [&](CellId, EdgeSlot) { ++edges; });
  return edges;
}

int fin_cells(const Fish& f) {
  std::set<CellId> cells;
  walk_fin(f, [&](CellId c, EdgeSlot) { cells.insert(c); });
  return static_cast<int>(cells.size());
}

}  // namespace fishbij
