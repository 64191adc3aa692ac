#include <doctest.h>

#include <random>
#include <set>

#include "qldd/pauli.hpp"
#include "support/dense_oracle.hpp"

using namespace qldd;
namespace dt = qldd::testing;

namespace {

PauliOperator random_pauli(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<uint32_t> bits(0, (1u << n) - 1);
  std::uniform_int_distribution<int> phase(0, 3);
  return PauliOperator{n, bits(rng), bits(rng), phase(rng)};
}

}  // namespace

TEST_CASE("parse_pauli transcribes fields") {
  PauliOperator p = parse_pauli("+XIIX");
  CHECK(p.n == 4);
  CHECK(p.x == 0b1001);
  CHECK(p.z == 0);
  CHECK(p.phase_exp == 0);
  CHECK(format_pauli(p) == "+XIIX");

  // Bare strings canonicalize to an explicit plus.
  CHECK(format_pauli(parse_pauli("XIIX")) == "+XIIX");
  CHECK(format_pauli(parse_pauli("-iYZ")) == "-iYZ");
  CHECK(format_pauli(parse_pauli("+iI")) == "+iI");
}

TEST_CASE("parse_pauli rejects malformed input") {
  CHECK_THROWS_AS(parse_pauli("XQ"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("-i"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("XIIXXIIXXIIXXIIXX"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("x"), std::invalid_argument);
}

TEST_CASE("-iY is the product of X and Z") {
  // The Y convention is pinned by the dense 2x2 product, not by fiat.
  PauliOperator x = parse_pauli("X");
  PauliOperator z = parse_pauli("Z");
  PauliOperator xz = multiply(x, z);
  CHECK(format_pauli(xz) == "-iY");
  CHECK(xz == parse_pauli("-iY"));
  CHECK((dt::dense(xz) - dt::dense(x) * dt::dense(z)).norm() ==
        doctest::Approx(0.0));

  PauliOperator zx = multiply(z, x);
  CHECK(format_pauli(zx) == "+iY");
}

TEST_CASE("multiply matches the known 4-qubit identities") {
  CHECK(format_pauli(multiply(parse_pauli("ZZZZ"), parse_pauli("IIZZ"))) ==
        "+ZZII");
  // Hermitian Paulis are involutions.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    PauliOperator p = random_pauli(rng, 3);
    p.phase_exp = (p.phase_exp & 2) | (std::popcount(p.x & p.z) & 1);
    REQUIRE(is_hermitian(p));
    CHECK(multiply(p, p) == identity_op(3));
  }
  CHECK_THROWS_AS(multiply(parse_pauli("XX"), parse_pauli("X")),
                  std::invalid_argument);
}

TEST_CASE("multiply is phase-exact against dense matrices") {
  std::mt19937_64 rng(20230);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 340; ++trial) {
      PauliOperator a = random_pauli(rng, n);
      PauliOperator b = random_pauli(rng, n);
      PauliOperator prod = multiply(a, b);
      double err = (dt::dense(prod) - dt::dense(a) * dt::dense(b)).norm();
      REQUIRE(err < 1e-12);
    }
  }
}

TEST_CASE("multiply is associative") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    PauliOperator a = random_pauli(rng, 4);
    PauliOperator b = random_pauli(rng, 4);
    PauliOperator c = random_pauli(rng, 4);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("commutes matches the dense commutator") {
  CHECK(commutes(parse_pauli("XXXX"), parse_pauli("ZZZZ")));
  CHECK_FALSE(commutes(parse_pauli("X"), parse_pauli("Z")));
  CHECK(commutes(parse_pauli("IXII"), parse_pauli("XIIX")));

  std::mt19937_64 rng(4242);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 120; ++trial) {
      PauliOperator a = random_pauli(rng, n);
      PauliOperator b = random_pauli(rng, n);
      dt::Matrix comm =
          dt::dense(a) * dt::dense(b) - dt::dense(b) * dt::dense(a);
      CHECK(commutes(a, b) == (comm.norm() < 1e-12));
    }
  }
}

TEST_CASE("weight counts affected qubits") {
  CHECK(weight(parse_class("IIII")) == 0);
  CHECK(weight(parse_class("XIIX")) == 2);
  CHECK(weight(parse_class("ZIZZ")) == 3);
}

TEST_CASE("generate_group reproduces the known orders") {
  auto gens = std::vector<PauliClass>{parse_class("XIIX"), parse_class("IIXX"),
                                      parse_class("IIZZ"), parse_class("ZIIZ")};
  CHECK(generate_group(4, gens, 256).order() == 16);

  GeneratedGroup stab = generate_group(
      4, {parse_class("XXXX"), parse_class("ZZZZ")}, 256);
  CHECK(stab.order() == 4);
  CHECK(stab.contains(parse_class("YYYY")));
  CHECK(stab.contains(parse_class("IIII")));

  CHECK(generate_group(2, {}, 16).order() == 1);
  CHECK_THROWS(generate_group(4, gens, 8));
  CHECK_THROWS_AS(
      generate_group(4, {parse_class("XIIX"), parse_class("XX")}, 256),
      std::invalid_argument);
}

TEST_CASE("single-qubit X and Z per qubit generate the full factor group") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<PauliClass> gens;
    for (int q = 1; q <= n; ++q) {
      gens.push_back(pauli_class(single_qubit_op(n, q, 'X')));
      gens.push_back(pauli_class(single_qubit_op(n, q, 'Z')));
    }
    CHECK(generate_group(n, gens, class_count(n)).order() == class_count(n));
  }
}

TEST_CASE("enumerate_classes yields each class once in key order") {
  CHECK(enumerate_classes(1).size() == 4);
  CHECK(enumerate_classes(4).size() == 256);

  auto classes = enumerate_classes(2);
  CHECK(classes.size() == 16);
  std::set<uint64_t> keys;
  uint64_t prev = 0;
  for (size_t i = 0; i < classes.size(); ++i) {
    uint64_t key = class_key(classes[i]);
    keys.insert(key);
    if (i > 0) CHECK(key > prev);
    prev = key;
  }
  CHECK(keys.size() == 16);
}

TEST_CASE("class operations ignore phases") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    PauliOperator p = random_pauli(rng, 4);
    for (int extra = 0; extra < 4; ++extra) {
      PauliOperator q = p;
      q.phase_exp = (q.phase_exp + extra) & 3;
      CHECK(pauli_class(q) == pauli_class(p));
    }
  }
}
