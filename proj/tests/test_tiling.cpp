#include <doctest.h>

#include "lcoalg/error.hpp"
#include "lcoalg/tiling.hpp"
#include "oracles.hpp"

using namespace lcoalg;

TEST_CASE("shift coproducts agree with the index formula") {
  for (std::size_t n = 1; n <= 5; ++n) {
    FnFamily f = build_fn(n);
    REQUIRE(f.coproducts.size() == n);
    for (std::size_t alpha = 0; alpha < n; ++alpha) {
      auto expected = oracle::shift_coproduct(n, alpha);
      for (BasisId id : f.basis->ids()) {
        bool ones = true;
        CHECK(oracle::unit_pairs(f.coproducts[alpha](id), &ones) == expected.at(f.basis->label(id)));
        CHECK(ones);
      }
    }
  }
  CHECK_THROWS_AS(build_fn(9), Error);
}

TEST_CASE("F coproduct lists") {
  LCoalgebra f = f_coalgebra();
  auto r = [&](const char* v) { return f.right(f.basis->at(v)).to_string(); };
  auto l = [&](const char* v) { return f.left(f.basis->at(v)).to_string(); };
  CHECK(r("a") == "1*a(x)a + 1*b(x)c");
  CHECK(r("b") == "1*a(x)b + 1*b(x)d");
  CHECK(r("c") == "1*c(x)a + 1*d(x)c");
  CHECK(r("d") == "1*c(x)b + 1*d(x)d");
  CHECK(l("a") == "1*a(x)c + 1*b(x)a");
  CHECK(l("b") == "1*a(x)d + 1*b(x)b");
  CHECK(l("c") == "1*c(x)c + 1*d(x)a");
  CHECK(l("d") == "1*c(x)d + 1*d(x)b");
}

TEST_CASE("counits of the family") {
  FnFamily f = build_fn(3);
  for (std::size_t a = 0; a < 3; ++a) {
    auto [eps, report] = counit_alpha(f, a);
    CHECK(report.verdict);
    // eps_[alpha](U_ij) = 1 exactly when j = p^alpha(i).
    for (std::size_t i = 1; i <= 3; ++i)
      for (std::size_t j = 1; j <= 3; ++j)
        CHECK(eps(f.basis->at(oracle::u_label(i, j))) == Scalar(j == oracle::shift(i, a, 3) ? 1 : 0));
  }
  CHECK_THROWS_AS(counit_alpha(f, 3), Error);
}

TEST_CASE("pairwise entanglement matches the dense oracle") {
  for (std::size_t n = 2; n <= 3; ++n) {
    FnFamily f = build_fn(n);
    CHECK(verify_family_entanglement(f).verdict);
    for (const auto& a : f.coproducts)
      for (const auto& b : f.coproducts) CHECK(oracle::pair_relation(oracle::dense(a), oracle::dense(b)));
  }
}

TEST_CASE("tiling supports match the oracle") {
  for (std::size_t n = 2; n <= 4; ++n) {
    TilingReport r = verify_tiling(n);
    CHECK(r.verdict);
    CHECK(r.pairwise_disjoint);
    CHECK(r.union_is_complete);
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(r.arrow_counts[a] == n * n * n);
      std::set<std::pair<std::string, std::string>> expected;
      for (auto [s, t] : oracle::tiling_support(n, a)) expected.insert({std::to_string(s), std::to_string(t)});
      CHECK(r.supports[a].labelled_arrow_pairs() == expected);
    }
    CHECK(r.glued.labelled_arrow_pairs() == oracle::de_bruijn_arrows(n * n, 1));
  }
  Json j = to_json(verify_tiling(2));
  CHECK(j["arrow_counts"] == Json::array({8, 8}));
  CHECK(j["total_arrows"] == 16);
}

TEST_CASE("matrix action") {
  FnFamily f = build_fn(2);
  ScalarMatrix z{{1, 2}, {3, 4}};
  auto [moved, report] = matrix_action(f.coproducts, z);
  CHECK(report.verdict);
  std::vector<oracle::Dense2> ds{oracle::dense(f.coproducts[0]), oracle::dense(f.coproducts[1])};
  CHECK(oracle::dense(moved[0]) == oracle::combine(ds, {1, 2}));
  CHECK(oracle::dense(moved[1]) == oracle::combine(ds, {3, 4}));
  CHECK_THROWS_AS(matrix_action(f.coproducts, ScalarMatrix{{1}}), Error);
}

TEST_CASE("reconstruction operators") {
  CHECK(bracket_reconstruction_n2().verdict);
  for (std::size_t n = 2; n <= 4; ++n) CHECK(reconstruct_delta0(n).verdict);
  CHECK_THROWS_AS(reconstruct_delta0(7), Error);
}

TEST_CASE("shift forms") {
  for (std::size_t n = 2; n <= 4; ++n) CHECK(check_shift_forms(build_fn(n)).verdict);
  FnFamily f = build_fn(3);
  TensorMatrix u = symbolic_u(f);
  CHECK(shift_columns(shift_columns(u, 1), -1) == u);
  CHECK(shift_columns(u, 3) == u);
}
