#include "bc/derand.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace bc {

int SplitterFamily::range() const {
  return moduli.empty() ? 0 : *std::max_element(moduli.begin(), moduli.end());
}

std::vector<int> first_primes(int count) {
  std::vector<int> primes;
  for (int c = 2; static_cast<int>(primes.size()) < count; ++c) {
    bool prime = true;
    for (int p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

SplitterFamily build_splitter(int domain, int set_size) {
  if (set_size < 1 || domain < 1 || set_size > domain)
    throw std::invalid_argument("splitter needs 1 <= s <= n");
  SplitterFamily f;
  f.domain = domain;
  f.set_size = set_size;
  if (set_size == 1 || set_size == domain) {
    f.moduli = {domain};
    return f;
  }
  const double pairs = 0.5 * set_size * (set_size - 1);
  const int count = static_cast<int>(std::ceil(pairs * std::log2(static_cast<double>(domain)))) + 1;
  for (int q : first_primes(count)) {
    if (q >= domain) break;
    f.moduli.push_back(q);
  }
  if (static_cast<int>(f.moduli.size()) < count) f.moduli.push_back(domain);
  return f;
}

namespace {

// Calls visit(U) for every U subset of [range] with |U| <= max_size, by size
// then lexicographically. Stops early when visit returns true.
template <class Visit>
bool for_each_small_subset(int range, int max_size, Visit&& visit) {
  std::vector<int> u;
  for (int size = 0; size <= std::min(max_size, range); ++size) {
    u.resize(size);
    for (int i = 0; i < size; ++i) u[i] = i;
    while (true) {
      if (visit(u)) return true;
      int i = size - 1;
      while (i >= 0 && u[i] == range - size + i) --i;
      if (i < 0) break;
      ++u[i];
      for (int j = i + 1; j < size; ++j) u[j] = u[j - 1] + 1;
    }
  }
  return false;
}

}  // namespace

RankCutOutcome solve_deterministic(const RankCutInstance& original, const DeterministicOptions& options) {
  validate(original);
  RankCutInstance inst = without_isolated(original);
  RankCutOutcome out;

  auto attempt = [&](EdgeSet black) {
    ++out.iterations;
    auto cut = try_coloring(inst, make_coloring(inst, std::move(black)));
    if (cut) {
      ++out.span_checks;
      out.cut = std::move(cut);
      return true;
    }
    return false;
  };

  if (inst.k == 0) {
    attempt({});
    out.budget = 1;
    return out;
  }

  RelevantEdges rel = relevant_edges(inst);
  out.max_degree = rel.max_degree;
  EdgeSet merged = make_set(inst.merged);
  EdgeSet candidates;
  std::set_difference(rel.edges.begin(), rel.edges.end(), merged.begin(), merged.end(),
                      std::back_inserter(candidates));
  if (candidates.empty()) {
    attempt({});
    out.budget = 1;
    return out;
  }

  const int m_prime = static_cast<int>(candidates.size());
  const std::int64_t wanted = static_cast<std::int64_t>(inst.k) + 6LL * inst.k * rel.max_degree;
  const int s = static_cast<int>(std::min<std::int64_t>(wanted, m_prime));
  SplitterFamily family = build_splitter(m_prime, s);

  std::set<EdgeSet> tried;
  std::int64_t pairs = 0;
  for (int member = 0; member < family.size(); ++member) {
    const int q = family.moduli[member];
    std::vector<char> in_u(q, 0);
    bool stop = for_each_small_subset(q, inst.k, [&](const std::vector<int>& u) {
      if (options.pair_cap && pairs >= *options.pair_cap) {
        out.exhaustive = false;
        return true;
      }
      ++pairs;
      std::fill(in_u.begin(), in_u.end(), 0);
      for (int c : u) in_u[c] = 1;
      EdgeSet black;
      for (int i = 0; i < m_prime; ++i)
        if (in_u[family.apply(member, i)]) black.push_back(candidates[i]);
      if (!tried.insert(black).second) return false;
      return attempt(std::move(black));
    });
    if (stop) break;
  }
  out.budget = pairs;
  return out;
}

}  // namespace bc
