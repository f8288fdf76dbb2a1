#include <catch2/catch.hpp>

#include <random>

#include "diagrw/tensor.hpp"

using namespace diagrw;

namespace {

using IntTensor = Tensor<IntegerRing>;
using ModTensor = Tensor<ModPrimeField>;

IntTensor ints(std::size_t in, std::size_t out, std::vector<std::int64_t> entries) {
  return IntTensor(in, out, IndexSet{2}, IntegerRing{}, std::move(entries));
}

ModTensor random_mod(std::mt19937_64& rng, std::size_t in, std::size_t out) {
  ModPrimeField f;
  std::vector<std::uint64_t> e(std::size_t{1} << (in + out));
  for (auto& v : e) v = rng() % f.modulus;
  return ModTensor(in, out, IndexSet{2}, f, std::move(e));
}

}  // namespace

TEST_CASE("delta is the Kronecker delta on multi-indices", "[tensor]") {
  auto d1 = delta<IntegerRing>(1);
  CHECK(d1.at({0}, {0}) == 1);
  CHECK(d1.at({0}, {1}) == 0);

  auto d0 = delta<IntegerRing>(0);
  REQUIRE(d0.entries().size() == 1);
  CHECK(d0.entries()[0] == 1);

  auto d2 = delta<IntegerRing>(2);
  CHECK(std::count(d2.entries().begin(), d2.entries().end(), 1) == 4);
  CHECK(d2.entries().size() == 16);
}

TEST_CASE("contract agrees with hand-multiplied matrices", "[tensor]") {
  // [[1,2],[3,4]] . [[5,6],[7,8]] = [[19,22],[43,50]]
  auto a = ints(1, 1, {1, 2, 3, 4});
  auto b = ints(1, 1, {5, 6, 7, 8});
  auto c = contract(a, b);
  CHECK(std::vector<std::int64_t>(c.entries().begin(), c.entries().end()) == std::vector<std::int64_t>{19, 22, 43, 50});

  CHECK(tensor_equiv(contract(delta<IntegerRing>(1), a), a));
  CHECK(tensor_equiv(contract(a, delta<IntegerRing>(1)), a));

  auto state = ints(0, 1, {2, 3});
  auto effect = ints(1, 0, {5, 7});
  auto scalar = contract(state, effect);
  CHECK(scalar.inputs() == 0);
  CHECK(scalar.outputs() == 0);
  CHECK(scalar.entries()[0] == 31);

  CHECK_THROWS_AS(contract(ints(1, 1, {1, 0, 0, 1}), delta<IntegerRing>(2)), ShapeError);
}

TEST_CASE("tensor_product agrees with the hand Kronecker product", "[tensor]") {
  auto a = ints(1, 1, {1, 2, 3, 4});
  auto b = ints(1, 1, {0, 5, 6, 7});
  // Rows (a_in, b_in), columns (a_out, b_out).
  std::vector<std::int64_t> kron = {0, 5,  0,  10,  //
                                    6, 7,  12, 14,  //
                                    0, 15, 0,  20,  //
                                    18, 21, 24, 28};
  auto p = tensor_product(a, b);
  CHECK(p.inputs() == 2);
  CHECK(p.outputs() == 2);
  CHECK(std::vector<std::int64_t>(p.entries().begin(), p.entries().end()) == kron);

  CHECK(tensor_equiv(tensor_product(delta<IntegerRing>(1), delta<IntegerRing>(1)), delta<IntegerRing>(2)));
  auto one = ints(0, 0, {1});
  CHECK(tensor_equiv(tensor_product(one, a), a));
  CHECK(tensor_equiv(tensor_product(a, one), a));
}

TEST_CASE("tensor_equiv", "[tensor]") {
  auto a = ints(1, 1, {1, 2, 3, 4});
  CHECK(tensor_equiv(a, a));
  CHECK(tensor_equiv(delta<IntegerRing>(1), swap_tensor<IntegerRing>(1, 0)));
  CHECK(tensor_equiv(delta<IntegerRing>(1), swap_tensor<IntegerRing>(0, 1)));
  CHECK_FALSE(tensor_equiv(delta<IntegerRing>(1), ints(1, 1, {1, 1, 1, 1})));
  CHECK_FALSE(tensor_equiv(delta<IntegerRing>(1), delta<IntegerRing>(2)));

  ComplexField f;
  Tensor<ComplexField> x(0, 0, IndexSet{2}, f, {{1.0, 0.0}});
  Tensor<ComplexField> near(0, 0, IndexSet{2}, f, {{1.0 + 5e-10, 0.0}});
  Tensor<ComplexField> far(0, 0, IndexSet{2}, f, {{1.0 + 1e-6, 0.0}});
  CHECK(tensor_equiv(x, near));
  CHECK_FALSE(tensor_equiv(x, far));
}

TEST_CASE("swap, cup and cap tensors", "[tensor]") {
  auto s = swap_tensor<IntegerRing>(1, 1);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t d = 0; d < 2; ++d) {
          CHECK(s.at({a, b}, {c, d}) == ((c == b && d == a) ? 1 : 0));
        }
      }
    }
  }

  auto cup0 = cup_tensor<IntegerRing>(0);
  CHECK(cup0.entries().size() == 1);
  CHECK(cup0.entries()[0] == 1);

  // (cup 1 * id 1) ; (id 1 * cap 1) = id 1, and the mirror image.
  auto yank = contract(tensor_product(cup_tensor<IntegerRing>(1), delta<IntegerRing>(1)),
                       tensor_product(delta<IntegerRing>(1), cap_tensor<IntegerRing>(1)));
  CHECK(tensor_equiv(yank, delta<IntegerRing>(1)));
  auto yank2 = contract(tensor_product(delta<IntegerRing>(1), cup_tensor<IntegerRing>(1)),
                        tensor_product(cap_tensor<IntegerRing>(1), delta<IntegerRing>(1)));
  CHECK(tensor_equiv(yank2, delta<IntegerRing>(1)));
}

TEST_CASE("random interpretations are deterministic per seed", "[tensor]") {
  auto i1 = random_interpretation(7);
  auto i2 = random_interpretation(7);
  auto i3 = random_interpretation(8);
  CHECK(tensor_equiv(i1("f", 1, 1), i2("f", 1, 1)));
  CHECK_FALSE(tensor_equiv(i1("f", 1, 1), i3("f", 1, 1)));
  CHECK_FALSE(tensor_equiv(i1("f", 1, 1), i1("g", 1, 1)));
  CHECK(i1("c", 0, 0).entries().size() == 1);

  std::size_t in[] = {1}, out[] = {0};
  CHECK(random_entry(3, "f", in, out) == random_entry(3, "f", in, out));
}

TEST_CASE("contraction laws over Z_p", "[tensor][property]") {
  std::mt19937_64 rng(12345);
  ModPrimeField f;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = rng() % 3, m = rng() % 3, k = rng() % 3, l = rng() % 3;
    auto a = random_mod(rng, n, m);
    auto b = random_mod(rng, m, k);
    auto c = random_mod(rng, k, l);
    CHECK(tensor_equiv(contract(contract(a, b), c), contract(a, contract(b, c))));
    CHECK(tensor_equiv(contract(delta<ModPrimeField>(n, IndexSet{2}, f), a), a));
    CHECK(tensor_equiv(contract(a, delta<ModPrimeField>(m, IndexSet{2}, f)), a));

    CHECK(tensor_equiv(tensor_product(tensor_product(a, b), c), tensor_product(a, tensor_product(b, c))));

    auto a2 = random_mod(rng, k, l);
    auto b2 = random_mod(rng, l, n);
    CHECK(tensor_equiv(contract(tensor_product(a, a2), tensor_product(b, b2)),
                       tensor_product(contract(a, b), contract(a2, b2))));
  }
}

TEST_CASE("semirings", "[tensor]") {
  ModPrimeField f;
  CHECK(f.mul(f.modulus - 1, f.modulus - 1) == 1);
  CHECK(f.from_int(-1) == f.modulus - 1);
  BooleanSemiring b;
  auto t = Tensor<BooleanSemiring>(1, 1, IndexSet{2}, b, std::vector<std::uint8_t>{1, 1, 0, 1});
  auto tt = contract(t, t);
  CHECK(tensor_equiv(tt, t));
  CHECK_THROWS(IndexSet{0});
}
