#include "exotica/classify.hpp"
#include "exotica/fibration.hpp"
#include "exotica/surgery.hpp"

#include <doctest.h>

#include <random>

namespace exotica {

  namespace {
    TopInvariants z2(std::int64_t chi, std::int64_t sigma, W2Type t) {
      return {chi, sigma, Pi1::z2, t == W2Type::II ? SpinStatus::spin : SpinStatus::nonspin, t};
    }
  }  // namespace

  TEST_CASE("rohlin") {
    CHECK(rohlin_nonspin(-24) == Rohlin::certified_nonspin);
    CHECK(rohlin_nonspin(-48) == Rohlin::inconclusive);
    CHECK(rohlin_nonspin(0) == Rohlin::inconclusive);
    CHECK(rohlin_nonspin(8) == Rohlin::certified_nonspin);
    CHECK(spin_status(Rohlin::certified_nonspin) == SpinStatus::nonspin);
    CHECK(spin_status(Rohlin::inconclusive) == SpinStatus::unknown);
    for (int n = 1; n <= 20; ++n) {
      for (int k = 0; k <= budget_check(n, 0).k_max; ++k) {
        bool const certified = rohlin_nonspin(-12 * n + 12 * k) == Rohlin::certified_nonspin;
        CHECK(certified == ((n - k) % 4 != 0));
      }
    }
  }

  TEST_CASE("w2 types") {
    CHECK(w2_type(SpinStatus::nonspin, SpinStatus::nonspin) == W2Type::I);
    CHECK(w2_type(SpinStatus::spin, SpinStatus::spin) == W2Type::II);
    CHECK(w2_type(SpinStatus::spin, SpinStatus::nonspin) == W2Type::III);
    CHECK(w2_type(SpinStatus::unknown, SpinStatus::nonspin) == W2Type::undetermined);
    CHECK(w2_type(SpinStatus::spin, SpinStatus::unknown) == W2Type::undetermined);
    CHECK_THROWS_AS(w2_type(SpinStatus::nonspin, SpinStatus::spin), InvalidArgument);
    CHECK(to_string(W2Type::I) == "I");
    CHECK(to_string(Pi1::z2) == "Z/2");
    CHECK(to_string(Rohlin::certified_nonspin) == "certified-nonspin");
  }

  TEST_CASE("quotients and models") {
    auto q = quotient_invariants(simply_connected_invariants(44, -24));
    CHECK(q.chi == 22);
    CHECK(q.sigma == -12);
    CHECK(q.pi1 == Pi1::z2);
    CHECK(q.w2type == W2Type::I);
    auto q1 = quotient_invariants(simply_connected_invariants(24, -12));
    CHECK(q1.chi == 12);
    CHECK(q1.sigma == -6);
    CHECK_THROWS_AS(quotient_invariants(simply_connected_invariants(45, -24)), InvalidArgument);
    CHECK_THROWS_AS(quotient_invariants(q), InvalidArgument);

    auto m = model_invariants(4, 16);
    CHECK(m.chi == 22);
    CHECK(m.sigma == -12);
    CHECK(m.w2type == W2Type::I);
    auto z1 = model_invariants(0, 0);
    CHECK(z1.chi == 2);
    CHECK(z1.sigma == 0);
    CHECK(z1.w2type == W2Type::undetermined);
    CHECK(homeo_equivalent(q, m));

    for (int n = 1; n <= 20; ++n) {
      for (int k = 0; k <= budget_check(n, 0).k_max; ++k) {
        auto mm = model_invariants(2 * n, 8 * n - 6 * k);
        CHECK(mm.chi == 10 * n - 6 * k + 2);
        CHECK(mm.sigma == -6 * n + 6 * k);
        auto qq = quotient_invariants(simply_connected_invariants(20 * n - 12 * k + 4, -12 * n + 12 * k));
        CHECK(qq.chi == mm.chi);
        CHECK(qq.sigma == mm.sigma);
      }
    }
  }

  TEST_CASE("homeomorphism comparator") {
    CHECK_FALSE(homeo_equivalent(z2(22, -12, W2Type::I), z2(22, -12, W2Type::III)));
    CHECK_FALSE(homeo_equivalent(z2(22, -12, W2Type::I), z2(24, -12, W2Type::I)));
    CHECK_THROWS_AS(homeo_equivalent(z2(22, -12, W2Type::undetermined), z2(22, -12, W2Type::I)),
                    PreconditionFailed);
    auto trivial = simply_connected_invariants(44, -24);
    CHECK_THROWS_AS(homeo_equivalent(trivial, trivial), PreconditionFailed);
    auto not_smooth = z2(22, -12, W2Type::I);
    not_smooth.closed_smooth_oriented = false;
    CHECK_THROWS_AS(homeo_equivalent(not_smooth, not_smooth), PreconditionFailed);

    auto a = full_construction(2, 0, 1);
    auto b = full_construction(2, 0, 5);
    auto qa = quotient_invariants(simply_connected_invariants(a.state.chi, a.state.sigma));
    auto qb = quotient_invariants(simply_connected_invariants(b.state.chi, b.state.sigma));
    CHECK(homeo_equivalent(qa, qb));
  }

  TEST_CASE("homeo_equivalent is an equivalence relation") {
    std::mt19937_64                    rng(17);
    std::uniform_int_distribution<int> chi(1, 3), sig(-1, 1), type(0, 2);
    W2Type const types[] = {W2Type::I, W2Type::II, W2Type::III};
    auto random_record = [&] { return z2(2 * chi(rng), 2 * sig(rng), types[type(rng)]); };
    int transitive_cases = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      auto x = random_record(), y = random_record(), z = random_record();
      CHECK(homeo_equivalent(x, x));
      CHECK(homeo_equivalent(x, y) == homeo_equivalent(y, x));
      if (homeo_equivalent(x, y) && homeo_equivalent(y, z)) {
        CHECK(homeo_equivalent(x, z));
        ++transitive_cases;
      }
    }
    CHECK(transitive_cases > 0);
  }

  TEST_CASE("irreducibility and distinctness") {
    auto o = full_construction(2, 0, 1);
    CHECK(irreducibility_certificate(44, -24, o.survivors));
    CHECK(irreducibility_certificate(24, -12, o.survivors));
    CHECK_FALSE(irreducibility_certificate(4, -4, o.survivors));
    CHECK_THROWS_AS(irreducibility_certificate(44, -24, {}), PreconditionFailed);
    CHECK(sw_magnitudes_distinct({1, 2, 3, 4, 5}));
    CHECK_FALSE(sw_magnitudes_distinct({2, 2}));
  }

  TEST_CASE("family tables") {
    auto two = family_enumerator(2);
    REQUIRE(two.rows.size() == 1);
    CHECK(two.rows[0].l == 16);
    CHECK(two.rows[0].valid);

    auto three = family_enumerator(3);
    REQUIRE(three.rows.size() == 1);
    CHECK(three.rows[0].l == 24);
    CHECK(three.rows[0].valid);

    auto four = family_enumerator(4);
    REQUIRE(four.rows.size() == 2);
    CHECK(four.rows[0].l == 32);
    CHECK_FALSE(four.rows[0].valid);
    CHECK(four.rows[1].l == 26);
    CHECK(four.rows[1].valid);
    CHECK_FALSE(four.notes.empty());

    auto six = family_enumerator(6);
    REQUIRE(six.rows.size() == 3);
    CHECK(six.rows[0].valid);
    CHECK(six.rows[1].valid);
    CHECK_FALSE(six.rows[2].valid);

    auto one = family_enumerator(1);
    CHECK(one.rows.empty());
    CHECK(one.k_max < 0);
  }

}  // namespace exotica
