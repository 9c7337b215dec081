#include "ptab/core.hpp"

#include <algorithm>
#include <sstream>

namespace ptab {

void fail(errc code, const std::string& what) { throw error(code, what); }

void internal_violation(const std::string& what) {
  throw std::logic_error("internal invariant violated: " + what);
}

namespace {

void check_ground_set(int n) {
  if (n < 1) fail(errc::index_out_of_range, "ground-set size must be at least 1");
}

std::string arc_str(const Arc& a) {
  std::ostringstream os;
  os << '(' << a.src << ',' << a.dst << ')';
  return os.str();
}

std::string block_str(const std::vector<int>& block) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) os << ',';
    os << block[i];
  }
  os << '}';
  return os.str();
}

}  // namespace

LinkedPartition::LinkedPartition(int n, std::vector<Arc> arcs) : n_(n) {
  check_ground_set(n);
  std::sort(arcs.begin(), arcs.end());
  pred_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    if (a.src < 1 || a.dst > n || a.src >= a.dst)
      fail(errc::arc_out_of_range, "arc " + arc_str(a) + " is not a pair 1 <= i < j <= " +
                                       std::to_string(n));
    if (i > 0 && arcs[i - 1] == a)
      fail(errc::duplicate_arc, "arc " + arc_str(a) + " appears twice");
    if (pred_[a.dst] != 0)
      fail(errc::duplicate_right_endpoint,
           "arcs (" + std::to_string(pred_[a.dst]) + ',' + std::to_string(a.dst) +
               ") and " + arc_str(a) + " share right endpoint " + std::to_string(a.dst));
    pred_[a.dst] = a.src;
  }
  arcs_ = std::move(arcs);
}

int LinkedPartition::arc_into(int v) const {
  internal_check(v >= 1 && v <= n_, "vertex out of range");
  return pred_[v];
}

std::vector<int> LinkedPartition::arc_targets(int v) const {
  std::vector<int> out;
  for (const Arc& a : arcs_)
    if (a.src == v) out.push_back(a.dst);
  return out;
}

bool LinkedPartition::is_left_endpoint(int v) const {
  for (const Arc& a : arcs_)
    if (a.src == v) return true;
  return false;
}

LinkedPartition validate_arcs(int n, std::vector<Arc> arcs) {
  return LinkedPartition(n, std::move(arcs));
}

std::vector<std::vector<int>> blocks_of(const LinkedPartition& lp) {
  const int n = lp.n();
  std::vector<std::vector<int>> blocks;
  std::vector<char> left(n + 1, 0), right(n + 1, 0);
  for (const Arc& a : lp.arcs()) {
    left[a.src] = 1;
    right[a.dst] = 1;
  }
  for (int v = 1; v <= n; ++v) {
    if (left[v]) {
      std::vector<int> block{v};
      for (int t : lp.arc_targets(v)) block.push_back(t);
      blocks.push_back(std::move(block));
    } else if (!right[v]) {
      blocks.push_back({v});
    }
  }
  return blocks;  // ordered by minimum already: minima are distinct and scanned in order
}

LinkedPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  check_ground_set(n);
  std::vector<char> covered(n + 1, 0);
  std::vector<std::vector<int>> sorted;
  sorted.reserve(blocks.size());
  for (const auto& b : blocks) {
    if (b.empty()) fail(errc::not_a_cover, "a block is empty");
    std::vector<int> s(b);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() != b.size())
      fail(errc::invalid_argument, "block " + block_str(s) + " repeats an element");
    for (int v : s) {
      if (v < 1 || v > n)
        fail(errc::not_a_cover,
             "element " + std::to_string(v) + " of block " + block_str(s) +
                 " is outside [" + std::to_string(n) + "]");
      covered[v] = 1;
    }
    sorted.push_back(std::move(s));
  }
  for (int v = 1; v <= n; ++v)
    if (!covered[v])
      fail(errc::not_a_cover, "element " + std::to_string(v) + " is in no block");

  // Nearly disjoint: a shared element must be the minimum of exactly one of
  // the two blocks, and that block must not be a singleton.
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const auto& bi = sorted[i];
      const auto& bj = sorted[j];
      std::vector<int> shared;
      std::set_intersection(bi.begin(), bi.end(), bj.begin(), bj.end(),
                            std::back_inserter(shared));
      for (int k : shared) {
        const bool ok_i = k == bi.front() && bi.size() > 1 && k != bj.front();
        const bool ok_j = k == bj.front() && bj.size() > 1 && k != bi.front();
        if (!ok_i && !ok_j)
          fail(errc::not_nearly_disjoint,
               "blocks " + block_str(bi) + " and " + block_str(bj) +
                   " are not nearly disjoint at element " + std::to_string(k));
      }
    }
  }

  std::vector<Arc> arcs;
  for (const auto& b : sorted)
    for (std::size_t t = 1; t < b.size(); ++t) arcs.push_back({b.front(), b[t]});
  return validate_arcs(n, std::move(arcs));
}

VertexClasses classify_vertices(const LinkedPartition& lp) {
  const int n = lp.n();
  std::vector<char> left(n + 1, 0), right(n + 1, 0);
  for (const Arc& a : lp.arcs()) {
    left[a.src] = 1;
    right[a.dst] = 1;
  }
  VertexClasses out;
  out.kind.assign(n + 1, VertexKind::Singleton);
  for (int v = 1; v <= n; ++v) {
    if (left[v] && right[v]) {
      out.kind[v] = VertexKind::Transient;
      out.transients.push_back(v);
    } else if (left[v]) {
      out.kind[v] = VertexKind::Origin;
      out.origins.push_back(v);
    } else if (right[v]) {
      out.kind[v] = VertexKind::Destination;
      out.destinations.push_back(v);
    } else {
      out.singletons.push_back(v);
    }
    if (out.kind[v] != VertexKind::Destination) out.block_minima.push_back(v);
  }
  return out;
}

Permutation::Permutation(int n, std::vector<int> values) : n_(n) {
  check_ground_set(n);
  if (static_cast<int>(values.size()) != n)
    fail(errc::invalid_argument, "expected " + std::to_string(n) + " values, got " +
                                     std::to_string(values.size()));
  std::vector<char> seen(n + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n || seen[v])
      fail(errc::invalid_argument, "values are not a permutation of 1.." + std::to_string(n));
    seen[v] = 1;
  }
  values_ = std::move(values);
}

Permutation::Permutation(std::vector<int> values)
    : Permutation(static_cast<int>(values.size()), std::move(values)) {}

std::vector<int> Permutation::descents() const {
  std::vector<int> out;
  for (int i = 1; i < n_; ++i)
    if (values_[i - 1] > values_[i]) out.push_back(i);
  return out;
}

std::vector<int> Permutation::ascents() const {
  std::vector<int> out;
  for (int i = 1; i < n_; ++i)
    if (values_[i - 1] < values_[i]) out.push_back(i);
  return out;
}

int Permutation::weak_excedances() const {
  int count = 0;
  for (int i = 1; i <= n_; ++i)
    if (values_[i - 1] >= i) ++count;
  return count;
}

Shape::Shape(int n, std::vector<int> columns) : n_(n) {
  check_ground_set(n);
  std::sort(columns.begin(), columns.end());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const int c = columns[i];
    if (c < 1 || c > n)
      fail(errc::invalid_argument,
           "column label " + std::to_string(c) + " is outside [" + std::to_string(n) + "]");
    if (c == 1)
      fail(errc::invalid_argument, "vertex 1 cannot be a column label");
    if (i > 0 && columns[i - 1] == c)
      fail(errc::invalid_argument, "column label " + std::to_string(c) + " repeats");
  }
  columns_ = std::move(columns);
  std::size_t ci = 0;
  for (int v = 1; v <= n; ++v) {
    if (ci < columns_.size() && columns_[ci] == v)
      ++ci;
    else
      rows_.push_back(v);
  }
}

bool Shape::is_column(int label) const {
  return std::binary_search(columns_.begin(), columns_.end(), label);
}

int Shape::row_length(int r) const {
  return static_cast<int>(columns_.end() -
                          std::upper_bound(columns_.begin(), columns_.end(), r));
}

int Shape::column_height(int c) const {
  return static_cast<int>(std::lower_bound(rows_.begin(), rows_.end(), c) -
                          rows_.begin());
}

int Shape::row_index(int r) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), r);
  internal_check(it != rows_.end() && *it == r, "label is not a row");
  return static_cast<int>(it - rows_.begin());
}

int Shape::column_display_index(int c) const {
  internal_check(is_column(c), "label is not a column");
  return static_cast<int>(columns_.end() -
                          std::upper_bound(columns_.begin(), columns_.end(), c));
}

std::vector<int> Shape::columns_display() const {
  return {columns_.rbegin(), columns_.rend()};
}

std::string Shape::direction_word() const {
  std::string word(static_cast<std::size_t>(n_), 'V');
  for (int c : columns_) word[c - 1] = 'H';
  return word;
}

int PermutationTableau::at(int r, int c) const {
  internal_check(shape_.cell_exists(r, c), "no such cell");
  return filling_[shape_.row_index(r)][shape_.column_display_index(c)];
}

namespace {

// Row-major scan shared by validation and the brute-force filter.  Reports
// the first violation: an empty column (smallest label) or a forbidden 0
// (first in reading order).
struct RuleViolation {
  enum class What { none, dims, empty_column, forbidden_zero };
  What what = What::none;
  int col = 0;
  Cell cell;
};

RuleViolation scan_rules(const Shape& shape,
                         const std::vector<std::vector<std::uint8_t>>& filling) {
  RuleViolation v;
  const auto& rows = shape.rows();
  if (filling.size() != rows.size()) {
    v.what = RuleViolation::What::dims;
    return v;
  }
  const std::vector<int> display = shape.columns_display();
  std::vector<char> one_above(display.size(), 0);
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    const int r = rows[ri];
    const auto& row = filling[ri];
    if (static_cast<int>(row.size()) != shape.row_length(r)) {
      v.what = RuleViolation::What::dims;
      return v;
    }
    bool one_left = false;
    for (std::size_t ci = 0; ci < row.size(); ++ci) {
      if (row[ci] > 1) {
        v.what = RuleViolation::What::dims;
        return v;
      }
      if (row[ci] == 1) {
        one_left = true;
      } else if (one_above[ci] && one_left) {
        v.what = RuleViolation::What::forbidden_zero;
        v.cell = {r, display[ci]};
        return v;
      }
    }
    for (std::size_t ci = 0; ci < row.size(); ++ci)
      if (row[ci] == 1) one_above[ci] = 1;
  }
  // Smallest empty column label; display order is decreasing, scan backwards.
  for (std::size_t k = display.size(); k-- > 0;) {
    if (!one_above[k]) {
      v.what = RuleViolation::What::empty_column;
      v.col = display[k];
      return v;
    }
  }
  return v;
}

}  // namespace

bool filling_is_valid(const Shape& shape,
                      const std::vector<std::vector<std::uint8_t>>& filling) {
  return scan_rules(shape, filling).what == RuleViolation::What::none;
}

PermutationTableau validate_tableau(
    Shape shape, std::vector<std::vector<std::uint8_t>> filling) {
  const RuleViolation v = scan_rules(shape, filling);
  switch (v.what) {
    case RuleViolation::What::none:
      break;
    case RuleViolation::What::dims:
      fail(errc::invalid_argument, "filling does not match the cells of the shape");
    case RuleViolation::What::empty_column:
      fail(errc::empty_column,
           "column " + std::to_string(v.col) + " contains no 1");
    case RuleViolation::What::forbidden_zero:
      fail(errc::forbidden_zero,
           "cell (" + std::to_string(v.cell.row) + ',' + std::to_string(v.cell.col) +
               ") holds a 0 with a 1 above and a 1 to its left");
  }
  return PermutationTableau(std::move(shape), std::move(filling));
}

DotDiagram::DotDiagram(Shape shape, std::vector<Cell> dots)
    : shape_(std::move(shape)) {
  std::sort(dots.begin(), dots.end());
  for (std::size_t i = 0; i < dots.size(); ++i) {
    const Cell& d = dots[i];
    if (!shape_.cell_exists(d.row, d.col))
      fail(errc::inconsistent_dots,
           "dot (" + std::to_string(d.row) + ',' + std::to_string(d.col) +
               ") is not a cell of the shape");
    if (i > 0 && dots[i - 1] == d)
      fail(errc::inconsistent_dots,
           "dot (" + std::to_string(d.row) + ',' + std::to_string(d.col) + ") repeats");
  }
  dots_ = std::move(dots);
}

bool DotDiagram::has_dot(int r, int c) const {
  return std::binary_search(dots_.begin(), dots_.end(), Cell{r, c});
}

std::map<int, int> DotDiagram::topmost_row_by_column() const {
  std::map<int, int> top;
  for (const Cell& d : dots_) {
    auto [it, inserted] = top.emplace(d.col, d.row);
    if (!inserted) it->second = std::min(it->second, d.row);
  }
  return top;
}

std::vector<Cell> DotDiagram::restricted_cells() const {
  const std::map<int, int> top = topmost_row_by_column();
  std::vector<Cell> out;
  for (const Cell& d : dots_)
    if (top.at(d.col) != d.row) out.push_back(d);
  return out;
}

DotDiagram dots_of(const PermutationTableau& t) {
  const Shape& shape = t.shape();
  std::vector<Cell> dots;
  std::map<int, int> topmost;  // column -> row of its topmost 1
  for (int c : shape.columns()) {
    for (int r : shape.rows()) {
      if (r >= c) break;
      if (t.at(r, c) == 1) {
        topmost[c] = r;
        dots.push_back({r, c});
        break;
      }
    }
    internal_check(topmost.count(c) == 1, "column without a 1 in a valid tableau");
  }
  for (int r : shape.rows()) {
    // Restricted 0's of row r, scanning column labels upward so the first
    // hit is the geometrically rightmost one.
    for (int c : shape.columns()) {
      if (c <= r) continue;
      if (t.at(r, c) == 0 && topmost.at(c) < r) {
        dots.push_back({r, c});
        break;
      }
    }
  }
  return DotDiagram(shape, std::move(dots));
}

PermutationTableau tableau_from_dots(const DotDiagram& d) {
  const Shape& shape = d.shape();
  const auto topmost = d.topmost_row_by_column();
  if (static_cast<int>(topmost.size()) != shape.column_count())
    fail(errc::inconsistent_dots, "some column carries no dot");
  const std::vector<Cell> restricted = d.restricted_cells();
  for (std::size_t i = 1; i < restricted.size(); ++i)
    if (restricted[i - 1].row == restricted[i].row)
      fail(errc::inconsistent_dots,
           "row " + std::to_string(restricted[i].row) +
               " carries more than one non-topmost dot");

  const auto& rows = shape.rows();
  std::vector<std::vector<std::uint8_t>> filling(rows.size());
  for (std::size_t ri = 0; ri < rows.size(); ++ri)
    filling[ri].assign(shape.row_length(rows[ri]), 1);

  // Cells strictly above a topmost 1 are 0.
  for (const auto& [c, top_row] : topmost) {
    const int ci = shape.column_display_index(c);
    for (int r : rows) {
      if (r >= top_row) break;
      filling[shape.row_index(r)][ci] = 0;
    }
  }
  // A rightmost restricted 0 and everything strictly to its left are 0.
  for (const Cell& rest : restricted) {
    const int ri = shape.row_index(rest.row);
    for (int ci = 0; ci <= shape.column_display_index(rest.col); ++ci)
      filling[ri][ci] = 0;
  }

  PermutationTableau t = [&] {
    try {
      return validate_tableau(shape, std::move(filling));
    } catch (const error&) {
      fail(errc::inconsistent_dots, "dots do not reconstruct a valid tableau");
    }
  }();
  if (dots_of(t) != d)
    fail(errc::inconsistent_dots, "dots are not the dot diagram of their reconstruction");
  return t;
}

void Histogram::add(long long value, std::uint64_t count) {
  counts_[value] += count;
  total_ += count;
}

std::uint64_t Histogram::at(long long value) const {
  auto it = counts_.find(value);
  return it == counts_.end() ? 0 : it->second;
}

Histogram& Histogram::operator+=(const Histogram& other) {
  for (const auto& [value, count] : other.counts_) add(value, count);
  return *this;
}

}  // namespace ptab
