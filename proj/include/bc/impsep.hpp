#pragma once

#include <optional>
#include <vector>

#include "bc/graph.hpp"

namespace bc {

// A vertex separator S between X and Y together with Reach(X, S), the
// vertices reachable from X once S is deleted.
struct SeparatorRecord {
  VertexSet separator;
  VertexSet reach;
  friend bool operator==(const SeparatorRecord&, const SeparatorRecord&) = default;
};

struct MinSeparator {
  int size = 0;
  SeparatorRecord record;
};

VertexSet reach_set(const Graph& g, const VertexSet& sources, const VertexSet& removed);

// S is disjoint from X and Y and G \ S has no X-Y path.
bool is_separator(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& s);

// Minimum X-Y vertex separator with the smallest reach. nullopt when no
// separator exists (some X-Y edge). Throws std::invalid_argument if X and Y meet.
std::optional<MinSeparator> min_separator(const Graph& g, const VertexSet& x, const VertexSet& y);

// Inclusion-minimal, and no separator of at most the same size reaches a
// strict superset. Checked with one flow per vertex of S.
bool is_important(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& s);

// All important X-Y separators of size <= k, sorted by separator. At most 4^k.
// Throws std::invalid_argument if X and Y meet.
std::vector<SeparatorRecord> enumerate_important(const Graph& g, const VertexSet& x,
                                                 const VertexSet& y, int k);

}  // namespace bc
