#include "exotica/lattice.hpp"

#include <doctest.h>

#include <random>

namespace exotica {

  namespace {
    CohomologyClass cls(LatticePtr const& L, std::string const& name) {
      return CohomologyClass::basis(L, name);
    }

    CohomologyClass sum_e(LatticePtr const& L, int from, int to) {
      auto x = CohomologyClass::zero(L);
      for (int i = from; i <= to; ++i) {
        x = x + cls(L, "E" + std::to_string(i));
      }
      return x;
    }
  }  // namespace

  TEST_CASE("surgery lattice pairings") {
    auto L = make_surgery_lattice(2, 4, 3);
    auto f = cls(L, "f");
    auto s = cls(L, "s");
    auto t = cls(L, "iota_s");
    CHECK(pair(f, s) == 1);
    CHECK(pair(f, t) == 1);
    CHECK(pair(f, f) == 0);
    CHECK(square(s) == -5);
    CHECK(square(t) == -5);
    CHECK(pair(s, t) == 0);
    CHECK(square(cls(L, "E1")) == -1);
    CHECK(pair(cls(L, "E1"), cls(L, "E2")) == 0);
    CHECK(square(CohomologyClass::zero(L)) == 0);

    auto u1 = cls(L, "u1");
    auto u2 = cls(L, "u2");
    auto u3 = cls(L, "u3");
    CHECK(square(u1) == -2);
    CHECK(pair(u1, u2) == 1);
    CHECK(pair(u2, u3) == 1);
    CHECK(pair(u1, u3) == 0);
    CHECK(pair(u1, s) == 1);
    CHECK(pair(u2, s) == 0);
    CHECK(pair(u1, f) == 0);
  }

  TEST_CASE("pairing examples with blown-up classes") {
    auto L     = make_surgery_lattice(2, 4, 0);
    auto f     = cls(L, "f");
    auto s     = cls(L, "s");
    auto alpha = 7 * f + sum_e(L, 1, 4);
    auto v     = s - 2 * sum_e(L, 1, 2);
    CHECK(pair(alpha, v) == 11);
    CHECK(square(alpha) == -4);
    CHECK(square(v) == -13);
  }

  TEST_CASE("section drop per exceptional class") {
    for (int n = 1; n <= 6; ++n) {
      auto L = make_surgery_lattice(n, 12, 0);
      auto s = cls(L, "s");
      for (int d = 0; d <= 12; ++d) {
        CHECK(square(s - 2 * sum_e(L, 1, d)) == -(2 * n + 1) - 4 * d);
      }
    }
  }

  TEST_CASE("pairing is symmetric and bilinear") {
    auto                               L = make_surgery_lattice(3, 5, 4);
    std::mt19937_64                    rng(7);
    std::uniform_int_distribution<int> d(-6, 6);
    auto random_class = [&] {
      std::vector<std::int64_t> v(L->rank());
      for (auto& x : v) {
        x = d(rng);
      }
      return CohomologyClass(L, v);
    };
    for (int trial = 0; trial < 300; ++trial) {
      auto x = random_class(), y = random_class(), z = random_class();
      std::int64_t const a = d(rng), b = d(rng);
      CHECK(pair(x, y) == pair(y, x));
      CHECK(pair(a * x + b * y, z) == a * pair(x, z) + b * pair(y, z));
    }
  }

  TEST_CASE("lattice construction errors") {
    CHECK_THROWS_AS(IntersectionLattice::make({{"x", BasisRole::fiber}, {"x", BasisRole::section}},
                                              {{0, 1}, {1, 0}}),
                    InvalidArgument);
    CHECK_THROWS_AS(IntersectionLattice::make({{"x", BasisRole::fiber}, {"y", BasisRole::section}},
                                              {{0, 1}, {2, 0}}),
                    InvalidArgument);
    CHECK_THROWS_AS(IntersectionLattice::make({{"x", BasisRole::fiber}}, {{0, 1}}),
                    InvalidArgument);
    auto L1 = make_surgery_lattice(2, 1, 0);
    auto L2 = make_surgery_lattice(3, 1, 0);
    CHECK_THROWS_AS(pair(cls(L1, "f"), cls(L2, "f")), LatticeMismatch);
    CHECK_THROWS_AS(cls(L1, "u1"), InvalidArgument);
  }

  TEST_CASE("extension and lifting") {
    auto L  = make_surgery_lattice(2, 2, 0);
    auto L2 = L->extended({{"E3", BasisRole::exceptional}},
                          {std::vector<std::int64_t>(L->rank(), 0)},
                          {-1});
    CHECK(L2->extends(*L));
    CHECK_FALSE(L->extends(*L2));
    auto x = 3 * cls(L, "f") - cls(L, "E2");
    auto y = x.lifted(L2);
    CHECK(square(y) == square(x));
    CHECK(y.coeff("E3") == 0);
    CHECK(x.to_string() == "3f-E2");
    CHECK(CohomologyClass::zero(L).to_string() == "0");
  }

}  // namespace exotica
