#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fishbij/errors.hpp"

namespace fishbij {

// Fighting fish: 45-degree cells glued edge to edge into a branching surface.
// Each cell has four edges: lu/ll (left upper/lower) and ru/rl (right
// upper/lower).  Gluings are mutual: c.ru = d iff d.ll = c, c.rl = d iff
// d.lu = c.  The representation is the gluing graph itself; coordinates are
// derived metadata and distinct cells may share a coordinate.

using CellId = int;

enum EdgeSlot { RU = 0, RL = 1, LU = 2, LL = 3 };

struct Cell {
  CellId ru = -1, rl = -1, lu = -1, ll = -1;  // -1 = free edge
  CellId get(EdgeSlot s) const;
  void set(EdgeSlot s, CellId v);
  bool operator==(const Cell& o) const {
    return ru == o.ru && rl == o.rl && lu == o.lu && ll == o.ll;
  }
};

enum class Orientation { Descending, Ascending };

// A maximal strip.  Descending strips are listed top to bottom (successive
// cells glued rl -> lu), ascending strips bottom to top (ru -> ll).
struct StripRef {
  Orientation orientation;
  std::vector<CellId> cells;
};

struct CellKind {
  bool stem = false;
  bool tail = false;    // both right edges free
  bool branch = false;  // stem cell with no free right edge
};

// Raw mutable gluing graph used by builders; Fish::canonicalize turns it into
// a validated canonical value.
struct RawComplex {
  std::vector<Cell> cells;
  CellId add_cell() {
    cells.push_back(Cell{});
    return static_cast<CellId>(cells.size()) - 1;
  }
  // Glues slot s of a to the matching slot of b (both must be free).
  void glue(CellId a, EdgeSlot s, CellId b);
};

class Fish {
 public:
  // The single starting cell.
  static Fish head_fish();

  // Relabels a complex into head-seeded BFS order and checks the structural
  // invariants (mutual gluings, unique head, connectivity, path-independent
  // nonnegative coordinates, balanced free edge counts); throws InvalidFish
  // otherwise.  from_json additionally verifies constructibility.
  static Fish canonicalize(const RawComplex& raw);
  // Same, plus the map old id -> canonical id.
  static Fish canonicalize(const RawComplex& raw, std::vector<CellId>* perm);

  // Canonical JSON form; this exact byte string is also the canonical code.
  static Fish from_json(const std::string& json);

  int cell_count() const { return static_cast<int>(cells_.size()); }
  CellId head() const { return 0; }  // cells are stored in canonical order
  const Cell& cell(CellId c) const;
  const std::vector<Cell>& cells() const { return cells_; }

  // (u, v) = (number of rl steps, number of ru steps) from the head; derived,
  // path-independent, nonnegative.
  std::pair<int, int> coord(CellId c) const;

  // Size = number of free right edges - 1 (equals the number of free left
  // edges - 1).  Not the cell count: double gluing adds a cell but no size.
  int size() const;

  bool operator==(const Fish& o) const { return cells_ == o.cells_; }
  bool operator!=(const Fish& o) const { return !(cells_ == o.cells_); }

  std::string to_json() const;       // canonical serialization
  const std::string& code() const;   // same bytes, cached

 private:
  Fish() = default;
  std::vector<Cell> cells_;
  std::vector<std::pair<int, int>> coords_;
  mutable std::string code_;  // lazy cache of to_json()
};

// Version tag of the canonical fish JSON / code layout.
inline constexpr int kFishJsonVersion = 1;

// --- Growth operations (Algorithm A) ----------------------------------------

// A1: attach a new cell to the free right upper edge of c.
Fish glue_upper(const Fish& f, CellId c);
// A2: attach a new cell to the free right lower edge of c.
Fish glue_lower(const Fish& f, CellId c);
// A3: given a double-gluing site (some cell c with c.ru = a, c.rl = b, a.rl
// and b.ru free), attach one new cell to both a and b.  Size is unchanged.
Fish glue_double(const Fish& f, CellId a, CellId b);

// Variants reporting where the new cell landed after canonicalization.
struct GrowResult {
  Fish fish;
  CellId new_cell;
};
GrowResult glue_upper_tracked(const Fish& f, CellId c);
GrowResult glue_lower_tracked(const Fish& f, CellId c);
GrowResult glue_double_tracked(const Fish& f, CellId a, CellId b);

// --- Structure queries -------------------------------------------------------

// All maximal strips of one orientation; every cell lies in exactly one strip
// of each orientation.  Descending strips are ordered by the id of their top
// cell, ascending strips by the id of their bottom cell.
std::vector<StripRef> strips(const Fish& f, Orientation o);
StripRef jaw(const Fish& f);  // descending strip containing the head
// Index of the descending strip containing c, in the strips() order.
int descending_strip_index_of(const Fish& f, CellId c);

// Stem cells (Def.: a cell with a free right edge, or a branch cell: both
// right edges glued but its right point is the meeting point of two free
// edges, i.e. the corner fan at the right point is a path, not a cycle).
std::vector<CellKind> classify_cells(const Fish& f);
std::vector<CellId> stem_cells(const Fish& f);
std::vector<CellId> tails(const Fish& f);
std::vector<CellId> branch_cells(const Fish& f);
bool is_tail(const Fish& f, CellId c);

// Mirror image across the head's horizontal axis (lu<->ll, ru<->rl).
Fish conjugate(const Fish& f);
// Conjugate plus the cell correspondence f -> conjugate(f).
Fish conjugate_mapped(const Fish& f, std::vector<CellId>* map);
bool is_symmetric(const Fish& f);

// Fin: boundary walk from the head's left point, counterclockwise (first edge
// is the head's ll edge), ending right after the first traversal of a tail's
// rl edge (that lands on the tail's right point).
int fin_length(const Fish& f);  // free edges traversed
int fin_cells(const Fish& f);   // distinct cells visited by the fin

// Directed boundary step used by the fin walk: given a free edge (cell, slot)
// just traversed in boundary orientation, the next free boundary edge.
std::pair<CellId, EdgeSlot> boundary_next(const Fish& f, CellId c, EdgeSlot s);

}  // namespace fishbij
