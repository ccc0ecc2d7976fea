#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "vcp/verification.hpp"

using namespace vcp;
using fixtures::ivec;

TEST_CASE("orthogonality defect and X_AB on small examples") {
  const auto s = fixtures::row3_5d();
  const auto L = build_tensor(s);

  const auto [da, db] = orthogonality_defect(L, ivec({1, 1, 0, 0, 0}), ivec({0, 0, 0, 1, 0}));
  CHECK(da == 1);
  CHECK(db == 0);

  const auto a = ivec({0, 1, 1, 0, 0});
  const auto b = ivec({0, 0, 0, 1, 1});
  const auto r = defect_report(L, s, a, b);
  CHECK(r.xab_direct == 2);
  CHECK(r.xab_tensor == 2);
  CHECK(r.xab_pairs == 2);
  CHECK(r.dot_with_a == -1);
  CHECK(r.dot_with_b == 1);

  // Basis pairs always satisfy the magnitude identity.
  for (Index i = 1; i <= 5; ++i) {
    for (Index j = 1; j <= 5; ++j) {
      CHECK(xab_direct(L, IntVector::basis(5, i), IntVector::basis(5, j)) == 0);
    }
  }
}

TEST_CASE("the three X_AB evaluations agree with each other and the dense oracle") {
  std::mt19937_64 rng(0x5eed);
  const auto row3 = fixtures::row3_5d();
  const auto L3 = build_tensor(row3);
  int triples = 0;
  for (int n : {3, 5, 7}) {
    const auto all = [&] {
      auto st = enumerate_schemes(feasibility(n));
      return collect_schemes(st);
    }();
    for (int t = 0; t < 400; ++t) {
      const auto& s = all[rng() % all.size()];
      const auto L = build_tensor(s);
      const auto dense = oracle::dense_tensor(fixtures::to_rows(s));
      const auto a = fixtures::random_ivec(rng, n, 6);
      const auto b = fixtures::random_ivec(rng, n, 6);
      const auto r = defect_report(L, s, a, b);
      const auto expected = oracle::dense_xab(dense, fixtures::to_oracle(a), fixtures::to_oracle(b));
      CHECK(r.xab_direct == expected);
      CHECK(r.xab_tensor == expected);
      CHECK(r.xab_pairs == expected);
      ++triples;
    }
  }
  CHECK(triples >= 1000);

  for (int t = 0; t < 200; ++t) {
    const auto a = fixtures::random_ivec(rng, 5, 9);
    const auto b = fixtures::random_ivec(rng, 5, 9);
    CHECK(xab_pairs(L3, a, b, row3) == oracle::row3_xab_closed_form(fixtures::to_oracle(a), fixtures::to_oracle(b)));
  }
}

TEST_CASE("floating point evaluations agree to 1e-9 relative") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const auto s = fixtures::row2_7d();
  const auto L = build_tensor(s);
  for (int t = 0; t < 300; ++t) {
    auto a = RealVector::zero(7), b = RealVector::zero(7);
    for (Index i = 1; i <= 7; ++i) {
      a.component(i) = u(rng);
      b.component(i) = u(rng);
    }
    const auto r = defect_report(L, s, a, b);
    const double scale = std::max(1.0, norm2(a) * norm2(b));
    CHECK(std::abs(r.xab_direct - r.xab_tensor) <= 1e-9 * scale);
    CHECK(std::abs(r.xab_direct - r.xab_pairs) <= 1e-9 * scale);
  }
}

TEST_CASE("identity-level checks on known schemes") {
  CHECK(xab_identically_zero(build_tensor(fixtures::unique_3d())));
  CHECK(orthogonality_identically_zero(build_tensor(fixtures::unique_3d())));
  CHECK(xab_identically_zero(build_tensor(fixtures::row11_7d())));
  CHECK(xab_identically_zero(build_tensor(fixtures::row20_7d())));
  CHECK(orthogonality_identically_zero(build_tensor(fixtures::row11_7d())));

  const auto L2 = build_tensor(fixtures::row2_7d());
  CHECK(orthogonality_identically_zero(L2));
  CHECK_FALSE(xab_identically_zero(L2));
  CHECK_FALSE(xab_polynomial(L2).empty());

  auto st = enumerate_schemes(feasibility(5));
  std::size_t count = 0;
  while (auto s = st.next()) {
    const auto L = build_tensor(*s);
    CHECK_FALSE(xab_identically_zero(L));
    CHECK_FALSE(orthogonality_identically_zero(L));
    ++count;
  }
  CHECK(count == 6);
}

TEST_CASE("identity checks are sound: a zero verdict means zero on random inputs, a nonzero one is witnessed") {
  std::mt19937_64 rng(31337);
  for (int n : {3, 5, 7}) {
    auto st = enumerate_schemes(feasibility(n), {.prefix = {}, .resume_after = {}, .limit = 400});
    while (auto s = st.next()) {
      const auto L = build_tensor(*s);
      const bool xz = xab_identically_zero(L);
      const bool oz = orthogonality_identically_zero(L);
      if (xz || oz) {
        for (int t = 0; t < 20; ++t) {
          const auto a = fixtures::random_ivec(rng, n, 5);
          const auto b = fixtures::random_ivec(rng, n, 5);
          if (xz) CHECK(xab_direct(L, a, b) == 0);
          if (oz) {
            const auto [da, db] = orthogonality_defect(L, a, b);
            CHECK(da == 0);
            CHECK(db == 0);
          }
        }
      }
      if (!xz) {
        const auto w = find_xab_witness(L, 1, 0);
        REQUIRE(w);
        CHECK(w->xab != 0);
        CHECK(xab_direct(L, w->a, w->b) == w->xab);
      }
    }
  }
}

TEST_CASE("polynomial coefficients reproduce X_AB on random inputs") {
  std::mt19937_64 rng(4);
  const auto L = build_tensor(fixtures::row2_7d());
  const auto poly = xab_polynomial(L);
  for (int t = 0; t < 50; ++t) {
    const auto a = fixtures::random_ivec(rng, 7, 4);
    const auto b = fixtures::random_ivec(rng, 7, 4);
    std::int64_t v = 0;
    for (const auto& [m, c] : poly) {
      v += c * a.component(m[0]) * a.component(m[1]) * b.component(m[2]) * b.component(m[3]);
    }
    CHECK(v == xab_direct(L, a, b));
  }
}

TEST_CASE("orthogonality holds identically exactly for the closed schemes") {
  for (int n : {3, 5, 7}) {
    auto st = enumerate_schemes(feasibility(n));
    while (auto s = st.next()) {
      CHECK(orthogonality_identically_zero(build_tensor(*s)) == is_closed(*s));
    }
  }
}

TEST_CASE("X_AB scales quadratically in each argument") {
  std::mt19937_64 rng(8);
  for (int n : {5, 7}) {
    auto st = enumerate_schemes(feasibility(n), {.prefix = {}, .resume_after = {}, .limit = 30});
    while (auto s = st.next()) {
      const auto L = build_tensor(*s);
      const auto a = fixtures::random_ivec(rng, n, 5);
      const auto b = fixtures::random_ivec(rng, n, 5);
      const std::int64_t x = static_cast<std::int64_t>(rng() % 7) - 3;
      const std::int64_t y = static_cast<std::int64_t>(rng() % 7) - 3;
      CHECK(xab_direct(L, x * a, y * b) == x * x * y * y * xab_direct(L, a, b));
      CHECK(xab_pairs(L, x * a, y * b, *s) == x * x * y * y * xab_pairs(L, a, b, *s));
    }
  }
}

TEST_CASE("xab_pairs rejects a tensor built from a different scheme") {
  const auto L = build_tensor(fixtures::row11_7d());
  const auto a = IntVector::basis(7, 1);
  try {
    (void)xab_pairs(L, a, a, fixtures::row2_7d());
    FAIL("expected SchemeTensorMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemeTensorMismatch);
  }
  CHECK_THROWS_AS(xab_tensor(L, IntVector::basis(5, 1), a), Error);
}

TEST_CASE("witness search is deterministic") {
  const auto L = build_tensor(fixtures::row2_7d());
  const auto w1 = find_xab_witness(L, 42, 7);
  const auto w2 = find_xab_witness(L, 42, 7);
  REQUIRE(w1);
  CHECK(*w1 == *w2);
  for (auto x : w1->a.components()) CHECK((x >= -2 && x <= 2));
  CHECK_FALSE(find_xab_witness(build_tensor(fixtures::row11_7d()), 42, 7, 500));
}
