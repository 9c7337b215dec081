#pragma once

// Core domain types: linked partitions of [n] in arc representation,
// permutations of [n], staircase shapes with boundary labeling, 0/1
// permutation tableaux, and the dot diagrams (topmost 1's plus rightmost
// restricted 0's) that determine a tableau uniquely.
//
// Labeling convention used throughout: a shape of length n has its boundary
// labeled 1..n in increasing order from the top-right corner to the
// bottom-left corner.  Vertical boundary steps are row labels, horizontal
// steps are column labels.  Rows run top to bottom in increasing label
// order; columns run left to right in DECREASING label order, so the
// leftmost column carries the largest label.  Cells are always addressed by
// (row label, column label); the geometric position is derived.
//
// All types are immutable after construction and all operations are pure,
// so values can be shared freely across threads.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptab {

enum class errc {
  arc_out_of_range,
  duplicate_right_endpoint,
  duplicate_arc,
  not_a_cover,
  not_nearly_disjoint,
  empty_column,
  forbidden_zero,
  inconsistent_dots,
  cost_guard,
  unknown_statistic,
  index_out_of_range,
  invalid_argument,
  parse_error,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& what);

// Internal consistency violations (broken invariants, not bad input).
[[noreturn]] void internal_violation(const std::string& what);

inline void internal_check(bool ok, const char* what) {
  if (!ok) internal_violation(what);
}

// An arc (src, dst) with src < dst, drawn from a block's minimum to one of
// its other members in the linear representation.
struct Arc {
  int src = 0;
  int dst = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A linked partition of [n], stored as its arc set.  Canonical invariants:
// arcs are lexicographically sorted, every arc has 1 <= src < dst <= n, and
// no vertex is the right-hand endpoint of more than one arc.  Blocks are a
// derived view (see blocks_of).
class LinkedPartition {
 public:
  LinkedPartition(int n, std::vector<Arc> arcs);

  int n() const noexcept { return n_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  // Left endpoint of the unique arc ending at v, or 0 if there is none.
  int arc_into(int v) const;
  // Right endpoints of arcs leaving v, in increasing order.
  std::vector<int> arc_targets(int v) const;
  bool is_left_endpoint(int v) const;

  friend bool operator==(const LinkedPartition& a, const LinkedPartition& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> pred_;  // pred_[v] = source of the arc into v, 0 if none
};

// Factory matching the validation contract: sorts the arcs, then rejects
// out-of-range endpoints, duplicate arcs, and repeated right endpoints.
LinkedPartition validate_arcs(int n, std::vector<Arc> arcs);

// Blocks of a linked partition, sorted by their minima.  One block
// {v} ∪ targets(v) per left endpoint v, one singleton per isolated vertex.
std::vector<std::vector<int>> blocks_of(const LinkedPartition& lp);

// Rebuilds the arc representation from a block list, validating that the
// blocks cover [n] and are pairwise nearly disjoint: a shared element must
// be the minimum of exactly one of the two blocks, and that block must have
// more than one element.
LinkedPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

enum class VertexKind { Origin, Transient, Singleton, Destination };

struct VertexClasses {
  std::vector<VertexKind> kind;  // 1-based; kind[0] is unused
  std::vector<int> origins;
  std::vector<int> transients;
  std::vector<int> singletons;
  std::vector<int> destinations;
  // origins ∪ transients ∪ singletons in increasing order; these are
  // exactly the minima of the blocks.
  std::vector<int> block_minima;
};

VertexClasses classify_vertices(const LinkedPartition& lp);

// A permutation of [n] with its descent/ascent/weak-excedance statistics.
class Permutation {
 public:
  Permutation(int n, std::vector<int> values);
  explicit Permutation(std::vector<int> values);

  int n() const noexcept { return n_; }
  const std::vector<int>& values() const noexcept { return values_; }

  // Positions i in [1, n-1] with values[i] > values[i+1] (1-based).
  std::vector<int> descents() const;
  std::vector<int> ascents() const;
  // Number of positions i with values[i] >= i.
  int weak_excedances() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  int n_ = 0;
  std::vector<int> values_;
};

// A staircase shape of length n: the labels assigned to columns, with rows
// as the complement.  Vertex 1 is always a row.  Cell (r, c) exists iff r is
// a row label, c a column label, and r < c; row lengths are then weakly
// decreasing downward and empty rows are allowed.
class Shape {
 public:
  Shape(int n, std::vector<int> columns);

  int n() const noexcept { return n_; }
  const std::vector<int>& columns() const noexcept { return columns_; }  // increasing
  const std::vector<int>& rows() const noexcept { return rows_; }        // increasing

  bool is_column(int label) const;
  bool is_row(int label) const { return label >= 1 && label <= n_ && !is_column(label); }
  bool cell_exists(int r, int c) const { return is_row(r) && is_column(c) && r < c; }

  int row_count() const { return static_cast<int>(rows_.size()); }
  int column_count() const { return static_cast<int>(columns_.size()); }

  // Number of cells in row r: columns with label greater than r.
  int row_length(int r) const;
  // Number of cells in column c: rows with label smaller than c.
  int column_height(int c) const;

  // 0-based index of r within rows().
  int row_index(int r) const;
  // 0-based geometric position of column c from the left; the leftmost
  // column is the one with the largest label.
  int column_display_index(int c) const;
  // Column labels in geometric left-to-right order (decreasing label).
  std::vector<int> columns_display() const;

  // Boundary direction word s_1..s_n: 'V' for rows, 'H' for columns.
  std::string direction_word() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  int n_ = 0;
  std::vector<int> columns_;
  std::vector<int> rows_;
};

// A 0/1 filling of a shape satisfying the two tableau rules: every column
// contains at least one 1, and no 0 has both a 1 above it in its column and
// a 1 to its left in its row.  Construct through validate_tableau.
class PermutationTableau {
 public:
  const Shape& shape() const noexcept { return shape_; }
  // One vector per row in increasing row-label order; within a row, cells
  // run geometrically left to right (decreasing column label).
  const std::vector<std::vector<std::uint8_t>>& filling() const noexcept {
    return filling_;
  }

  // Entry of cell (r, c), addressed by labels.
  int at(int r, int c) const;

  friend bool operator==(const PermutationTableau&,
                         const PermutationTableau&) = default;

 private:
  PermutationTableau(Shape shape, std::vector<std::vector<std::uint8_t>> filling)
      : shape_(std::move(shape)), filling_(std::move(filling)) {}
  friend PermutationTableau validate_tableau(
      Shape shape, std::vector<std::vector<std::uint8_t>> filling);

  Shape shape_;
  std::vector<std::vector<std::uint8_t>> filling_;
};

PermutationTableau validate_tableau(
    Shape shape, std::vector<std::vector<std::uint8_t>> filling);

// True iff the filling satisfies both tableau rules; no allocation, no
// exceptions.  Shared with validate_tableau, which reports the offender.
bool filling_is_valid(const Shape& shape,
                      const std::vector<std::vector<std::uint8_t>>& filling);

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// The cells holding a tableau's topmost 1's and rightmost restricted 0's.
// Per column the minimal-row dot is the topmost 1 and any further dots are
// rightmost restricted 0's; a row carries at most one of the latter.  This
// is a sufficient statistic: see tableau_from_dots.
class DotDiagram {
 public:
  DotDiagram(Shape shape, std::vector<Cell> dots);

  const Shape& shape() const noexcept { return shape_; }
  const std::vector<Cell>& dots() const noexcept { return dots_; }  // sorted
  bool has_dot(int r, int c) const;

  // Minimal-row dot of each column, keyed by column label.
  std::map<int, int> topmost_row_by_column() const;
  // Non-topmost dots, sorted.
  std::vector<Cell> restricted_cells() const;

  friend bool operator==(const DotDiagram&, const DotDiagram&) = default;

 private:
  Shape shape_;
  std::vector<Cell> dots_;
};

// Extracts the dot diagram of a valid tableau.  Topmost 1 of a column: the
// 1 with no 1 above it (exactly one per column).  Rightmost restricted 0 of
// a row: among the 0's that have a 1 above them in their column, the
// geometrically rightmost one, i.e. the one with the SMALLEST column label.
DotDiagram dots_of(const PermutationTableau& t);

// Reconstructs the unique tableau with the given dots: cells above a
// topmost 1 and cells to the left of a rightmost restricted 0 become 0,
// every other cell becomes 1.  Fails with inconsistent_dots when the input
// does not arise from a valid tableau.
PermutationTableau tableau_from_dots(const DotDiagram& d);

// Exact integer census of a statistic over a family of objects.
class Histogram {
 public:
  void add(long long value, std::uint64_t count = 1);
  std::uint64_t at(long long value) const;
  std::uint64_t total() const noexcept { return total_; }
  const std::map<long long, std::uint64_t>& counts() const noexcept {
    return counts_;
  }
  Histogram& operator+=(const Histogram& other);

  friend bool operator==(const Histogram& a, const Histogram& b) {
    return a.counts_ == b.counts_;
  }

 private:
  std::map<long long, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

}  // namespace ptab
