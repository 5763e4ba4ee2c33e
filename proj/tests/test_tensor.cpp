#include <doctest.h>

#include "lcoalg/error.hpp"
#include "lcoalg/tensor.hpp"

using namespace lcoalg;

TEST_CASE("tensor rendering and parsing") {
  BasisPtr b = make_basis({"a", "b", "c", "d"});
  TensorElem t = parse_tensor(b, 2, "1*b(x)c + 1*a(x)a");
  CHECK(t.to_string() == "1*a(x)a + 1*b(x)c");
  CHECK(parse_tensor(b, 2, t.to_string()) == t);
  CHECK(parse_tensor(b, 2, "(q^-1)*a(x)b").to_string() == "(q^-1)*a(x)b");
  CHECK(parse_tensor(b, 2, "1*a(x)b - 1*a(x)b").is_zero());
  CHECK(TensorElem(b, 2).to_string() == "0");
  CHECK_THROWS_AS(parse_tensor(b, 2, "1*a(x)z"), Error);
  CHECK_THROWS_AS(parse_tensor(b, 2, "1*a"), Error);
}

TEST_CASE("legs and permutations") {
  BasisPtr b = make_basis({"x", "y"});
  TensorElem t = parse_tensor(b, 2, "2*x(x)y");
  CHECK(transpose(t).to_string() == "2*y(x)x");
  TensorElem u = tensor_product(t, parse_tensor(b, 1, "1*y"));
  CHECK(u.to_string() == "2*x(x)y(x)y");
  std::vector<std::size_t> perm{3, 1, 2};
  CHECK(permute_legs(u, perm).to_string() == "2*y(x)x(x)y");
  std::vector<std::size_t> bad{1, 1, 2};
  CHECK_THROWS_AS(permute_legs(u, bad), Error);
}

TEST_CASE("apply on a leg") {
  BasisPtr b = make_basis({"x", "y"});
  BasisMap swap(b, 1);
  swap.set(b->at("x"), TensorElem::vector(b, b->at("y")));
  swap.set(b->at("y"), TensorElem::vector(b, b->at("x")));
  TensorElem t = parse_tensor(b, 2, "1*x(x)x + 3*x(x)y");
  CHECK(apply_on_leg(swap, t, 2).to_string() == "3*x(x)x + 1*x(x)y");
  CHECK_THROWS_AS(apply_on_leg(swap, t, 3), Error);
  Counit eps(b);
  eps.set(b->at("x"), 1);
  CHECK(apply_counit_on_leg(eps, t, 2).to_string() == "1*x");
}

TEST_CASE("basis mismatch") {
  BasisPtr a = make_basis({"x"}), b = make_basis({"z"});
  CHECK_THROWS_AS(TensorElem::vector(a, BasisId{0}) + TensorElem::vector(b, BasisId{0}), Error);
  CHECK_THROWS_AS(make_basis({"x", "x"}), Error);
}

TEST_CASE("basis keys are lexicographic") {
  Basis b({"p", "q"});
  auto keys = basis_keys(b, 2);
  REQUIRE(keys.size() == 4);
  CHECK(keys[1] == Key{BasisId{0}, BasisId{1}});
}
