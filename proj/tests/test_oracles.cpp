#include <doctest.h>

#include "support/oracles.hpp"

using namespace zek;
using namespace zek::testing;

// The oracle is checked against textbook Alexander polynomials before it is
// trusted to certify anything else.

TEST_CASE("polynomial arithmetic") {
  CHECK(poly_mul({1, 1}, {1, 1}) == Poly{1, 2, 1});
  CHECK(poly_divexact({1, 2, 1}, {1, 1}) == Poly{1, 1});
  CHECK(poly_divexact(power_minus_one(6), power_minus_one(3)) == Poly{1, 0, 0, 1});
  CHECK_THROWS_AS(poly_divexact({1, 1, 1}, {1, 1}), std::logic_error);
}

TEST_CASE("torus knot Alexander polynomials") {
  // Delta_{T(2,3)} = t^2 - t + 1
  CHECK(torus_alexander(2, 3) == Poly{1, -1, 1});
  // Delta_{T(2,5)} = t^4 - t^3 + t^2 - t + 1
  CHECK(torus_alexander(2, 5) == Poly{1, -1, 1, -1, 1});
  // Delta_{T(3,4)} = t^6 - t^5 + t^3 - t + 1
  CHECK(torus_alexander(3, 4) == Poly{1, -1, 0, 1, 0, -1, 1});
  CHECK(poly_span(torus_alexander(2, 3)) == 2);
  CHECK(poly_span(torus_alexander(4, 5)) == 12);
}

TEST_CASE("genus oracle on basic expressions") {
  Knot u = Knot::make_unknot();
  CHECK(genus_oracle(u) == 0);
  CHECK(genus_oracle(Knot::make_cable(2, 3, u)) == 1);
  CHECK(genus_oracle(Knot::make_cable(2, 5, u)) == 2);
  // The (2,7)-cable of the trefoil: span 2*2 + 6 = 10, genus 5.
  CHECK(genus_oracle(Knot::make_cable(2, 7, Knot::make_cable(2, 3, u))) == 5);
  // Sums multiply Alexander polynomials, so spans (and genus) add.
  Knot sum = Knot::make_sum({Knot::make_cable(2, 3, u), Knot::make_cable(2, 5, u)});
  CHECK(genus_oracle(sum) == 3);
}
