#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bc/rank_cut.hpp"

namespace bc {

// Family of maps [domain] -> [modulus], x -> x mod q. For every subset of
// [domain] of size set_size, some member is injective on it.
struct SplitterFamily {
  int domain = 0;
  int set_size = 0;
  std::vector<int> moduli;

  int size() const { return static_cast<int>(moduli.size()); }
  int range() const;
  int apply(int member, int x) const { return x % moduli[member]; }
};

// Prime residues: x mod q is injective on S unless q divides one of the
// C(s,2) pairwise differences, each below the domain and so with fewer than
// log2(domain) prime factors. Taking ceil(C(s,2) log2 domain) + 1 primes
// leaves a good one; primes at or above the domain collapse into the identity.
// Throws std::invalid_argument unless 1 <= s <= domain.
SplitterFamily build_splitter(int domain, int set_size);

std::vector<int> first_primes(int count);

struct DeterministicOptions {
  // Stop after this many (member, U) pairs; the result is then labeled
  // non-exhaustive.
  std::optional<std::int64_t> pair_cap;
};

// Exact Rank-Cut: runs the reduction on every coloring "black iff f(e) in U"
// for f in a splitter over E_rel \ M with set size k + 6k*d and |U| <= k.
RankCutOutcome solve_deterministic(const RankCutInstance& inst,
                                   const DeterministicOptions& options = {});

}  // namespace bc
