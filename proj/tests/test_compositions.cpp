#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qchroma/composition.hpp"

using namespace qchroma;

namespace {

Composition c(std::vector<int> parts) { return Composition(std::move(parts)); }

}  // namespace

TEST_CASE("set_of matches partial sums") {
  CHECK(set_of(c({4})) == 0);
  CHECK(set_of(c({1, 3})) == 0b1);
  CHECK(set_of(c({2, 2})) == 0b10);
  CHECK(set_of(c({1, 1, 2})) == 0b11);
  // (1,4,1,2) |= 8 has partial sums 1, 5, 6.
  CHECK(set_of(c({1, 4, 1, 2})) == ((1u << 0) | (1u << 4) | (1u << 5)));
}

TEST_CASE("comp_of inverts set_of for every composition of n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    auto all = enumerate_compositions(n);
    CHECK(all.size() == (1u << (n - 1)));
    for (std::uint64_t mask = 0; mask < all.size(); ++mask) {
      // enumerate_compositions is ascending by set mask.
      CHECK(set_of(all[mask]) == mask);
      CHECK(comp_of(n, mask) == all[mask]);
    }
  }
}

TEST_CASE("reversal, complement, transpose") {
  CHECK(reversal(c({1, 2, 3})) == c({3, 2, 1}));
  CHECK(complement(c({3})) == c({1, 1, 1}));
  CHECK(complement(c({1, 1, 1})) == c({3}));
  CHECK(complement(c({2, 1})) == c({1, 2}));
  CHECK(transpose(c({2, 1})) == c({2, 1}));
  CHECK(transpose(c({1, 4, 1, 2})) == reversal(complement(c({1, 4, 1, 2}))));

  for (int n = 1; n <= 7; ++n) {
    for (const auto& a : enumerate_compositions(n)) {
      CHECK(reversal(reversal(a)) == a);
      CHECK(complement(complement(a)) == a);
      CHECK(transpose(transpose(a)) == a);
      CHECK(transpose(a) == complement(reversal(a)));
      CHECK(transpose(a) == reversal(complement(a)));
    }
  }
}

TEST_CASE("refines is the superset order on set masks") {
  CHECK(refines(c({1, 1, 2}), c({2, 2})));
  CHECK(refines(c({1, 1, 1, 1}), c({4})));
  CHECK(!refines(c({2, 2}), c({1, 3})));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : enumerate_compositions(n)) {
      CHECK(refines(a, a));
      for (const auto& b : enumerate_compositions(n)) {
        bool superset = (set_of(a) & set_of(b)) == set_of(b);
        CHECK(refines(a, b) == superset);
      }
    }
  }
}

TEST_CASE("meet is the coarsest common refinement") {
  CHECK(meet(c({2, 2}), c({1, 3})) == c({1, 1, 2}));
  CHECK(meet(c({4}), c({4})) == c({4}));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : enumerate_compositions(n)) {
      for (const auto& b : enumerate_compositions(n)) {
        const Composition m = meet(a, b);
        CHECK(set_of(m) == (set_of(a) | set_of(b)));
        CHECK(refines(m, a));
        CHECK(refines(m, b));
      }
    }
  }
}

TEST_CASE("gamma splits the meet into blocks sized by the second argument") {
  const auto blocks = gamma(c({1, 2, 1, 3}), c({3, 4}));
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == c({1, 2}));
  CHECK(blocks[1] == c({1, 3}));

  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : enumerate_compositions(n)) {
      for (const auto& b : enumerate_compositions(n)) {
        const auto g = gamma(a, b);
        REQUIRE(static_cast<int>(g.size()) == b.length());
        long long eta_sum = 0;
        for (int i = 0; i < b.length(); ++i) {
          CHECK(g[i].total() == b.part(i));
          eta_sum += eta(g[i]);
        }
        CHECK(eta_gamma(a, b) == eta_sum);
      }
    }
  }
}

TEST_CASE("eta sums the elements of set(alpha)") {
  CHECK(eta(c({3})) == 0);
  CHECK(eta(c({1, 2, 3})) == 1 + 3);
  CHECK(eta(c({3, 3, 2})) == 3 + 6);
  CHECK(eta(c({1, 1, 1, 1})) == 1 + 2 + 3);
}

TEST_CASE("eta_gamma worked values") {
  CHECK(eta_gamma(c({1, 2, 1, 3}), c({3, 4})) == 2);
  // gamma(alpha, (n)) = [meet(alpha,(n))] = [alpha], so eta_gamma = eta.
  CHECK(eta_gamma(c({2, 1, 2}), c({5})) == eta(c({2, 1, 2})));
  // Blocks of size 1 contribute nothing.
  CHECK(eta_gamma(c({1, 1, 1}), c({1, 1, 1})) == 0);
}

TEST_CASE("lambda_of sorts parts decreasing") {
  CHECK(lambda_of(c({1, 3, 1, 2})) == std::vector<int>{3, 2, 1, 1});
  CHECK(lambda_of(c({2, 2})) == std::vector<int>{2, 2});
}

TEST_CASE("z_of is the centralizer size of the sorted partition") {
  CHECK(z_of(c({1})) == 1);
  CHECK(z_of(c({2})) == 2);
  CHECK(z_of(c({1, 1})) == 2);
  CHECK(z_of(c({2, 1})) == 2);
  CHECK(z_of(c({1, 1, 1})) == 6);
  CHECK(z_of(c({3})) == 3);
  CHECK(z_of(c({2, 2})) == 8);
  // lambda = (3,2,1,1): z = 3 * 2 * 1^2 * 2! = 12.
  CHECK(z_of(c({1, 2, 1, 3})) == 12);
  // z_of depends only on the multiset of parts.
  CHECK(z_of(c({3, 1, 2, 1})) == 12);
}

TEST_CASE("to_string and parse round-trip") {
  CHECK(to_string(c({1, 4, 1, 2})) == "(1,4,1,2)");
  CHECK(parse_composition("(1,4,1,2)") == c({1, 4, 1, 2}));
  CHECK(parse_composition("1,4,1,2") == c({1, 4, 1, 2}));
  for (int n = 1; n <= 7; ++n) {
    for (const auto& a : enumerate_compositions(n)) {
      CHECK(parse_composition(to_string(a)) == a);
    }
  }
  // The empty composition of n = 0 prints and parses as "()".
  CHECK(parse_composition("()") == Composition{});
  CHECK(to_string(Composition{}) == "()");
  CHECK_THROWS_AS(parse_composition("(1,0,2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_composition("(1,,2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_composition("(1,x)"), std::invalid_argument);
}

TEST_CASE("composition constructor rejects nonpositive parts") {
  CHECK_THROWS_AS(Composition({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({-2}), std::invalid_argument);
}
