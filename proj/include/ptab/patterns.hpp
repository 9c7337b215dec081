#pragma once

// Crossing/nesting analysis on linked partitions and the two forbidden dot
// configurations on tableaux.  Two arcs (i1,j1), (i2,j2) with i1 < i2 form a
// crossing when i1 < i2 < j1 < j2 and a nesting when i1 < i2 < j2 < j1.
//
// The dot patterns live on the dot diagram, never on the raw filling.  For
// labels i1 < i2 < j1 < j2 with i1, i2 rows and j1, j2 columns:
//   pattern i2: dots at (i1,j2) and (i2,j1), no dot at (i2,j2);
//   pattern j2: dots at (i1,j1) and (i2,j2), no dot at (i2,j1).
// The fourth cell of the rectangle is unconstrained.

#include <optional>
#include <utility>
#include <vector>

#include "ptab/core.hpp"

namespace ptab {

// All crossing (resp. nesting) pairs, each reported with the smaller left
// endpoint first, in lexicographic order of the pair of arcs.
std::vector<std::pair<Arc, Arc>> crossings(const LinkedPartition& lp);
std::vector<std::pair<Arc, Arc>> nestings(const LinkedPartition& lp);

bool is_noncrossing(const LinkedPartition& lp);
bool is_nonnesting(const LinkedPartition& lp);

struct PatternWitness {
  int i1 = 0;
  int i2 = 0;
  int j1 = 0;
  int j2 = 0;
  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

// Lexicographically smallest witness (i1, i2, j1, j2), or nullopt when the
// diagram avoids the pattern.
std::optional<PatternWitness> contains_i2(const DotDiagram& d);
std::optional<PatternWitness> contains_j2(const DotDiagram& d);
std::optional<PatternWitness> contains_i2(const PermutationTableau& t);
std::optional<PatternWitness> contains_j2(const PermutationTableau& t);

}  // namespace ptab
