#include <doctest.h>

#include <random>
#include <stdexcept>

#include <zerosum/enumeration.hpp>
#include <zerosum/minimality.hpp>
#include <zerosum/sequence.hpp>

using namespace zerosum;

TEST_CASE("zero sum check") {
  CHECK(is_zero_sum(parse_seq("2^3,-3^2")));
  CHECK(is_zero_sum(parse_seq("0")));
  CHECK_FALSE(is_zero_sum(parse_seq("2,2")));
  CHECK(is_zero_sum(ZSeq{}));  // the empty sum is zero
}

TEST_CASE("fast minimality on known sequences") {
  CHECK(is_minimal_fast(parse_seq("0")).minimal);
  CHECK(is_minimal_fast(parse_seq("1,-1")).minimal);
  CHECK(is_minimal_fast(parse_seq("2^3,-3^2")).minimal);
  CHECK(is_minimal_fast(parse_seq("4^2,3,-1^2,-9")).minimal);
  CHECK(is_minimal_fast(parse_seq("5,3,2^2,-6^2")).minimal);
  CHECK(is_minimal_fast(parse_seq("4^2,3,1,-6^2")).minimal);

  MinimalityVerdict v = is_minimal_fast(parse_seq("2,-2,3,-3"));
  CHECK_FALSE(v.minimal);
  REQUIRE(v.witness.has_value());
  CHECK(render(*v.witness) == "2,-2");

  MinimalityVerdict w = is_minimal_fast(parse_seq("1,2,-3,4,-4"));
  CHECK_FALSE(w.minimal);
  REQUIRE(w.witness.has_value());
  CHECK(render(*w.witness) == "2,1,-3");
  CHECK(w.witness->proper_subseq_of(parse_seq("1,2,-3,4,-4")));
  CHECK(w.witness->sum() == 0);
}

TEST_CASE("a zero term is itself a witness") {
  MinimalityVerdict v = is_minimal_fast(parse_seq("0,1,-1"));
  CHECK_FALSE(v.minimal);
  REQUIRE(v.witness.has_value());
  CHECK(render(*v.witness) == "0");
  CHECK(is_minimal_fast(parse_seq("0^2")).minimal == false);
}

TEST_CASE("fast minimality rejects bad input") {
  CHECK_THROWS_AS(is_minimal_fast(ZSeq{}), std::invalid_argument);
  CHECK_THROWS_AS(is_minimal_fast(parse_seq("1,2")), std::invalid_argument);
}

TEST_CASE("oracle enforces its length cap") {
  ZSeq big = parse_seq("1^21,-21");
  CHECK(big.length() == 22);
  CHECK_THROWS_AS(is_minimal_oracle(big), std::invalid_argument);
  CHECK(is_minimal_fast(big).minimal);
}

TEST_CASE("fast and oracle verdicts agree on every small atom") {
  for (int n = 1; n <= 3; ++n) {
    AtomSet atoms = brute_force_atoms(n);
    for (const ZSeq& s : atoms.atoms) {
      CHECK(is_minimal_fast(s).minimal);
      CHECK(is_minimal_oracle(s).minimal);
    }
  }
}

TEST_CASE("fast and oracle verdicts agree on random zero-sum sequences") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> len_dist(2, 12);
  std::uniform_int_distribution<int> value_dist(-8, 8);
  int disagreements = 0;
  int nonminimal = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    ZSeq s;
    int len = len_dist(rng);
    long long sum = 0;
    for (int i = 0; i + 1 < len; ++i) {
      int v = 0;
      while (v == 0) v = value_dist(rng);
      s.add(v);
      sum += v;
    }
    if (sum > 64 || sum < -64) continue;
    s.add(static_cast<int>(-sum));
    MinimalityVerdict fast = is_minimal_fast(s);
    MinimalityVerdict slow = is_minimal_oracle(s);
    if (fast.minimal != slow.minimal) ++disagreements;
    if (!fast.minimal) {
      ++nonminimal;
      REQUIRE(fast.witness.has_value());
      CHECK(fast.witness->sum() == 0);
      CHECK(fast.witness->proper_subseq_of(s));
      CHECK_FALSE(fast.witness->trivial());
    }
  }
  CHECK(disagreements == 0);
  CHECK(nonminimal > 100);  // the generator must exercise both verdicts
}
