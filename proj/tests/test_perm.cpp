#include "doctest.h"

#include <random>

#include "symgraph/perm.hpp"

using namespace symgraph;

namespace {

Permutation random_perm(unsigned degree, std::mt19937_64& rng) {
  std::vector<uint8_t> images(degree);
  for (unsigned i = 0; i < degree; ++i) images[i] = static_cast<uint8_t>(i);
  for (unsigned i = degree; i > 1; --i)
    std::swap(images[i - 1], images[rng() % i]);
  return Permutation::from_images(std::move(images));
}

}  // namespace

TEST_CASE("compose applies the left factor first") {
  // (1 2 3) then (1 2) on 3 points equals (2 3).
  Permutation p = Permutation::parse_cycles("(1 2 3)", 3);
  Permutation q = Permutation::parse_cycles("(1 2)", 3);
  Permutation r = compose(p, q);
  CHECK(r == Permutation::parse_cycles("(2 3)", 3));
  CHECK(r.images()[0] == 0);
  CHECK(r.images()[1] == 2);
  CHECK(r.images()[2] == 1);
}

TEST_CASE("identity is neutral and inverses cancel") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Permutation p = random_perm(12, rng);
    CHECK(compose(p, Permutation(12)) == p);
    CHECK(compose(Permutation(12), p) == p);
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(compose(inverse(p), p).is_identity());
  }
}

TEST_CASE("compose rejects degree mismatch") {
  Permutation p(3), q(4);
  CHECK_THROWS_AS(compose(p, q), Error);
  try {
    compose(p, q);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeMismatch);
  }
}

TEST_CASE("from_images rejects non-bijections") {
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation::from_images({0, 1, 3}), Error);
  CHECK_THROWS_AS(Permutation::from_images({}), Error);
}

TEST_CASE("parity of basic shapes") {
  CHECK(parity(Permutation::parse_cycles("(1 2 3 4 5 6 7)", 7)) == Parity::even);
  CHECK(parity(Permutation::parse_cycles("(1 2)", 5)) == Parity::odd);
  // Seven disjoint transpositions on 14 points: an odd permutation.
  CHECK(parity(Permutation::parse_cycles(
            "(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)(13 14)", 14)) == Parity::odd);
  CHECK(parity(Permutation(9)) == Parity::even);
}

TEST_CASE("parity is a homomorphism over random pairs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10000; ++trial) {
    Permutation p = random_perm(11, rng);
    Permutation q = random_perm(11, rng);
    CHECK(parity(compose(p, q)) == (parity(p) ^ parity(q)));
  }
}

TEST_CASE("cycle type includes fixed points and sorts descending") {
  CHECK(cycle_type(Permutation(5)) == std::vector<unsigned>{1, 1, 1, 1, 1});
  CHECK(cycle_type(Permutation::parse_cycles("(1 2 3 4 5 6 7)", 12)) ==
        std::vector<unsigned>{7, 1, 1, 1, 1, 1});
  CHECK(cycle_type(Permutation::from_images({1, 0, 3, 2})) ==
        std::vector<unsigned>{2, 2});
}

TEST_CASE("cycle type is invariant under conjugation") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Permutation p = random_perm(10, rng);
    Permutation x = random_perm(10, rng);
    CHECK(cycle_type(conjugate(p, x)) == cycle_type(p));
  }
}

TEST_CASE("element order satisfies p^order = identity") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation p = random_perm(12, rng);
    uint64_t n = element_order(p);
    Permutation acc(12);
    for (uint64_t k = 0; k < n; ++k) acc = compose(acc, p);
    CHECK(acc.is_identity());
    for (uint64_t d = 1; d < n; ++d)
      if (n % d == 0) {
        Permutation partial(12);
        for (uint64_t k = 0; k < d; ++k) partial = compose(partial, p);
        CHECK_FALSE(partial.is_identity());
      }
  }
}

TEST_CASE("two-element detection") {
  CHECK(is_two_element(Permutation(6)));
  CHECK(is_two_element(Permutation::parse_cycles("(1 2)(3 4)", 6)));
  CHECK(is_two_element(Permutation::parse_cycles("(1 2 3 4)", 6)));
  CHECK_FALSE(is_two_element(Permutation::parse_cycles("(1 2 3)", 6)));
  CHECK_FALSE(is_two_element(Permutation::parse_cycles("(1 2 3 4 5 6)", 6)));
}

TEST_CASE("cycle notation round-trips exactly") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    Permutation p = random_perm(1 + rng() % 40, rng);
    std::string text = to_cycle_string(p);
    Permutation back = Permutation::parse_cycles(text, p.degree());
    CHECK(back == p);
    CHECK(to_cycle_string(back) == text);
  }
  CHECK(to_cycle_string(Permutation(4)) == "()");
  CHECK(Permutation::parse_cycles("()", 4) == Permutation(4));
  CHECK(to_cycle_string(Permutation::parse_cycles("(1 2 3)(4 5)", 5)) ==
        "(1 2 3)(4 5)");
}

TEST_CASE("cycle parser rejects malformed input") {
  CHECK_THROWS_AS(Permutation::parse_cycles("(1 2", 4), Error);
  CHECK_THROWS_AS(Permutation::parse_cycles("(0 1)", 4), Error);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1 5)", 4), Error);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1 2)(2 3)", 4), Error);
  CHECK_THROWS_AS(Permutation::parse_cycles("", 4), Error);
  CHECK_THROWS_AS(Permutation::parse_cycles("1 2 3", 4), Error);
}
