#include <doctest.h>

#include <cmath>
#include <set>

#include "bc/derand.hpp"
#include "bc/oracle.hpp"
#include "rank_cut_support.hpp"

using namespace bc;
using namespace bc::test;

namespace {

// Every s-subset of [n] is mapped injectively by some member.
bool splits_everything(const SplitterFamily& f) {
  const int n = f.domain, s = f.set_size;
  std::vector<int> pick(s);
  for (int i = 0; i < s; ++i) pick[i] = i;
  while (true) {
    bool split = false;
    for (int member = 0; member < f.size() && !split; ++member) {
      std::set<int> images;
      for (int x : pick) images.insert(f.apply(member, x));
      split = static_cast<int>(images.size()) == s;
    }
    if (!split) return false;
    int i = s - 1;
    while (i >= 0 && pick[i] == n - s + i) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

TEST_CASE("first_primes") {
  CHECK(first_primes(6) == std::vector<int>{2, 3, 5, 7, 11, 13});
  CHECK(first_primes(0).empty());
}

TEST_CASE("build_splitter edge cases") {
  SplitterFamily id = build_splitter(7, 7);
  CHECK(id.size() == 1);
  CHECK(id.range() == 7);
  for (int x = 0; x < 7; ++x) CHECK(id.apply(0, x) == x);

  SplitterFamily one = build_splitter(50, 1);
  CHECK(one.size() == 1);
  CHECK_THROWS_AS(build_splitter(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_splitter(5, 6), std::invalid_argument);
}

TEST_CASE("splitter is exhaustive for n' = 100, s = 3") {
  SplitterFamily f = build_splitter(100, 3);
  CHECK(f.range() <= 100);
  CHECK(splits_everything(f));
}

TEST_CASE("splitter is exhaustive on small domains") {
  for (int n = 1; n <= 24; ++n)
    for (int s = 1; s <= std::min(n, 4); ++s) {
      INFO("n = " << n << ", s = " << s);
      CHECK(splits_everything(build_splitter(n, s)));
    }
}

TEST_CASE("solve_deterministic examples") {
  RankCutInstance path;
  path.graph = path_graph(3);
  path.k = 1;
  path.x = {0};
  path.y = {2};
  auto out = solve_deterministic(path);
  REQUIRE(out.cut);
  CHECK(out.cut->size() == 1);
  CHECK(out.exhaustive);

  path.k = 0;
  CHECK_FALSE(solve_deterministic(path).cut);
}

TEST_CASE("solve_deterministic matches the rank-cut oracle") {
  int yes = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RankCutInstance inst = random_rank_cut(8000 + seed, 8, 1 + seed % 2);
    auto truth = oracle::brute_rank_cut(inst);
    auto out = solve_deterministic(inst);
    ++total;
    CHECK(out.cut.has_value() == truth.has_value());
    CHECK(out.exhaustive);
    if (out.cut) {
      ++yes;
      CHECK(verify_cut(inst, *out.cut));
    }
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    for (const auto& inst : compression_instances(8500 + seed, 7, 2)) {
      auto out = solve_deterministic(inst);
      CHECK(out.cut.has_value() == oracle::brute_rank_cut(inst).has_value());
      ++total;
    }
  CHECK(yes > 30);
  CHECK(total > 250);
}

TEST_CASE("pair cap makes the search non-exhaustive") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RankCutInstance inst = random_rank_cut(9000 + seed, 8, 2);
    auto full = solve_deterministic(inst);
    if (full.cut || full.iterations < 3) continue;
    auto capped = solve_deterministic(inst, {2});
    CHECK_FALSE(capped.cut);
    CHECK_FALSE(capped.exhaustive);
    CHECK(capped.iterations <= 2);
    return;
  }
  FAIL("no suitable no-instance found");
}

TEST_CASE("solve_deterministic is repeatable") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RankCutInstance inst = random_rank_cut(9500 + seed, 8, 2);
    auto a = solve_deterministic(inst);
    auto b = solve_deterministic(inst);
    CHECK(a.cut == b.cut);
    CHECK(a.iterations == b.iterations);
  }
}

TEST_CASE("C5 compression instances: solved exactly where a cut exists") {
  Graph c5 = cycle_graph(5);
  auto oct = find_oct(c5, 2);
  REQUIRE(oct);
  PrimeGraph pg = build_prime(c5, oct->removed, oct->coloring);
  int cuttable = 0;
  for (const auto& p : valid_partitions(pg)) {
    RankCutInstance inst{pg.augmented, 1, p.a, p.b, pg.merged};
    bool truth = oracle::brute_rank_cut(inst).has_value();
    CHECK(solve_deterministic(inst).cut.has_value() == truth);
    cuttable += truth ? 1 : 0;
  }
  CHECK(cuttable >= 1);
}
