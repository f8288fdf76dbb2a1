#include <catch2/catch.hpp>

#include <cmath>

#include "diagrw/model.hpp"
#include "diagrw/term_semantics.hpp"
#include "diagrw/zx.hpp"
#include "support/frobenius.hpp"
#include "support/zx_oracle.hpp"

using namespace diagrw;
using zx::Color;
namespace oracle = diagrw::testing::zx_oracle;

namespace {

using CTensor = Tensor<ComplexField>;

const double kRoot2 = std::sqrt(2.0);

CTensor semantics(const Term& t) { return term_semantics(t, zx::interp()); }

double max_diff(const CTensor& t, const oracle::Matrix& m) {
  double d = 0;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) d = std::max(d, std::abs(t.at_flat(r, c) - m[r][c]));
  }
  return d;
}

}  // namespace

TEST_CASE("spider and Hadamard tensors", "[zx]") {
  CHECK(tensor_equiv(zx::spider_tensor(Color::Z, 1, 1), delta<ComplexField>(1)));
  CHECK(tensor_equiv(contract(zx::hadamard_tensor(), zx::hadamard_tensor()), delta<ComplexField>(1)));

  auto x21 = zx::spider_tensor(Color::X, 2, 1);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t c = 0; c < 2; ++c) {
        std::complex<double> want = c == (a ^ b) ? 1.0 / kRoot2 : 0.0;
        CHECK(std::abs(x21.at({a, b}, {c}) - want) < 1e-12);
        int ia = static_cast<int>(a), ib = static_cast<int>(b), ic = static_cast<int>(c);
        CHECK(std::abs(x21.at({a, b}, {c}) - oracle::x({ia, ib, ic})) < 1e-12);
      }
    }
  }

  // Closed forms against the oracle, phases and arities included.
  for (double phase : {0.0, 0.7, 3.14159265358979}) {
    for (std::size_t n = 0; n <= 2; ++n) {
      for (std::size_t m = 0; m <= 2; ++m) {
        auto zt = zx::spider_tensor(Color::Z, n, m, phase);
        auto xt = zx::spider_tensor(Color::X, n, m, phase);
        for (std::size_t r = 0; r < zt.rows(); ++r) {
          for (std::size_t c = 0; c < zt.cols(); ++c) {
            std::vector<int> legs;
            for (std::size_t k = n; k-- > 0;) legs.push_back(static_cast<int>((r >> k) & 1));
            for (std::size_t k = m; k-- > 0;) legs.push_back(static_cast<int>((c >> k) & 1));
            CHECK(std::abs(zt.at_flat(r, c) - oracle::z(legs, phase)) < 1e-12);
            CHECK(std::abs(xt.at_flat(r, c) - oracle::x(legs, phase)) < 1e-12);
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(zx::interp()(zx::hadamard_label(), 2, 1), InterpretationError);
  CHECK_THROWS_AS(zx::interp()("nope", 1, 1), InterpretationError);
}

TEST_CASE("CNOT semantics", "[zx]") {
  auto cnot = semantics(zx::cnot());
  // (1/sqrt 2) |a, a xor b><a, b|
  oracle::Matrix frozen(4, std::vector<std::complex<double>>(4, 0.0));
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) frozen[2 * a + b][2 * a + (a ^ b)] = 1.0 / kRoot2;
  }
  CHECK(max_diff(cnot, frozen) < 1e-12);
  CHECK(max_diff(cnot, oracle::matrix(oracle::cnot)) < 1e-12);
  CHECK(max_diff(semantics(zx::notc()), oracle::matrix(oracle::notc)) < 1e-12);

  auto twice = semantics(Term::compose(zx::cnot(), zx::cnot()));
  CHECK(tensor_equiv(twice, scale(delta<ComplexField>(2), {0.5, 0.0})));

  auto perturbed = std::vector<std::complex<double>>(twice.entries().begin(), twice.entries().end());
  perturbed[0] += 1e-3;
  CHECK_FALSE(tensor_equiv(CTensor(2, 2, IndexSet{2}, ComplexField{}, perturbed), scale(delta<ComplexField>(2), {0.5, 0.0})));

  auto three = semantics(Term::compose(Term::compose(zx::cnot(), zx::notc()), zx::cnot()));
  CHECK(tensor_equiv(three, scale(swap_tensor<ComplexField>(1, 1), {1.0 / (2 * kRoot2), 0.0})));
}

TEST_CASE("ZX rules hold in the qubit model", "[zx][model]") {
  auto interp = zx::interp();
  auto z11 = zx::spider(Color::Z, 1, 1);
  CHECK(concrete_model_check<ComplexField>(z11, Term::id(1), interp));
  auto fused = Term::compose(zx::spider(Color::Z, 1, 2), Term::stack(z11, Term::id(1)));
  CHECK(concrete_model_check<ComplexField>(fused, zx::spider(Color::Z, 1, 2), interp));
  auto half = Term::compose(zx::spider(Color::Z, 1, 1, 0.5), zx::spider(Color::Z, 1, 1, 0.25));
  CHECK(concrete_model_check<ComplexField>(half, zx::spider(Color::Z, 1, 1, 0.75), interp));
  CHECK_FALSE(concrete_model_check<ComplexField>(z11, zx::hadamard(), interp));

  CHECK_NOTHROW(zx::theory());
  auto thy = zx::theory();
  CHECK(check_theory(thy).all_ok());
}

TEST_CASE("phase labels compare modulo 2 pi", "[zx]") {
  auto eq = zx::label_equiv();
  CHECK(eq(zx::spider_label(Color::Z, 0.0), zx::spider_label(Color::Z, 2 * 3.14159265358979323846)));
  CHECK_FALSE(eq(zx::spider_label(Color::Z, 0.0), zx::spider_label(Color::X, 0.0)));
  CHECK_FALSE(eq(zx::spider_label(Color::Z, 0.0), zx::spider_label(Color::Z, 0.1)));
}

TEST_CASE("shipped ZX files match the generators", "[zx]") {
  CHECK(testing::read_file(testing::theory_path("zx.thy")) == std::string(zx::theory_source()));
  auto shipped = nlohmann::json::parse(testing::read_file(testing::theory_path("zx.json")));
  CHECK(shipped == to_json(zx::theory_model()));

  auto model = model_from_json(shipped);
  auto thy = testing::load("zx.thy");
  for (const auto& r : thy.signature.rules) {
    INFO(r.name);
    CHECK(concrete_model_check<ComplexField>(r.lhs, r.rhs, model.interpretation()));
  }
  CHECK_THROWS_AS(model.interpretation()("z11", 2, 2), InterpretationError);
}
