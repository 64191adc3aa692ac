#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "qldd/stabcode.hpp"

using namespace qldd;

namespace {

// Independent membership oracle: the full centralizer set S*L generated
// with stabilizer and logical generators together.
GeneratedGroup centralizer_set(const StabilizerCode& code) {
  std::vector<PauliClass> gens;
  for (const auto& p : code.stabilizer_gens) gens.push_back(pauli_class(p));
  for (const auto& p : code.logical_x) gens.push_back(pauli_class(p));
  for (const auto& p : code.logical_z) gens.push_back(pauli_class(p));
  return generate_group(code.n, gens, class_count(code.n));
}

}  // namespace

TEST_CASE("builtin 422 definition is valid with the expected generators") {
  StabilizerCode code = builtin_422();
  CHECK(code.n == 4);
  CHECK(code.k == 2);
  CHECK(format_pauli(code.stabilizer_gens[0]) == "+XXXX");
  CHECK(format_pauli(code.stabilizer_gens[1]) == "+ZZZZ");
  CHECK(format_pauli(code.logical_x[0]) == "+XIIX");
  CHECK(format_pauli(code.logical_x[1]) == "+IIXX");
  CHECK(format_pauli(code.logical_z[0]) == "+IIZZ");
  CHECK(format_pauli(code.logical_z[1]) == "+ZIIZ");
  CHECK(code.stabilizer_set.size() == 4);
  CHECK(code.in_stabilizer(parse_class("YYYY")));
}

TEST_CASE("sign-tracked closure decides code validity") {
  // XX and ZZ multiply to -YY, which is still projectively fine: no -I.
  StabilizerCode code = make_code("bell", 2, 0, {"+XX", "+ZZ"}, {}, {});
  CHECK(code.stabilizer_set.size() == 4);
  CHECK(code.in_stabilizer(parse_class("YY")));

  // XX and YY also work: the closure contains -ZZ but never -I.
  CHECK_NOTHROW(make_code("bell2", 2, 0, {"+XX", "+YY"}, {}, {}));

  // Anticommuting generators are rejected outright.
  CHECK_THROWS_AS(make_code("bad", 2, 0, {"+XI", "+ZI"}, {}, {}),
                  std::invalid_argument);
  // -XX with XX puts -I in the group.
  CHECK_THROWS_AS(make_code("bad2", 2, 0, {"+XX", "-XX"}, {}, {}),
                  std::invalid_argument);
  // Dependent generators are caught by the closure size.
  CHECK_THROWS_AS(make_code("bad3", 3, 0, {"+ZII", "+IZI", "+ZZI"}, {}, {}),
                  std::invalid_argument);
  // Wrong canonical pattern: X-bar_1 must commute with Z-bar_2.
  CHECK_THROWS_AS(
      make_code("bad4", 2, 2, {}, {"+XI", "+IX"}, {"+ZI", "+ZZ"}),
      std::invalid_argument);
  // Count mismatch.
  CHECK_THROWS_AS(make_code("bad5", 4, 2, {"+XXXX"}, {"+XIIX", "+IIXX"},
                            {"+IIZZ", "+ZIIZ"}),
                  std::invalid_argument);
  // Non-Hermitian generator.
  CHECK_THROWS_AS(make_code("bad6", 2, 0, {"+iXX", "+ZZ"}, {}, {}),
                  std::invalid_argument);
}

TEST_CASE("trivial codes have the expected generators") {
  StabilizerCode t42 = trivial_code(4, 2);
  CHECK(format_pauli(t42.stabilizer_gens[0]) == "+IIZI");
  CHECK(format_pauli(t42.stabilizer_gens[1]) == "+IIIZ");
  CHECK(format_pauli(t42.logical_x[0]) == "+XIII");
  CHECK(format_pauli(t42.logical_x[1]) == "+IXII");
  CHECK(format_pauli(t42.logical_z[0]) == "+ZIII");
  CHECK(format_pauli(t42.logical_z[1]) == "+IZII");

  StabilizerCode t11 = trivial_code(1, 1);
  CHECK(t11.stabilizer_gens.empty());
  CHECK(format_pauli(t11.logical_x[0]) == "+X");

  StabilizerCode t20 = trivial_code(2, 0);
  CHECK(format_pauli(t20.stabilizer_gens[0]) == "+ZI");
  CHECK(format_pauli(t20.stabilizer_gens[1]) == "+IZ");

  CHECK_THROWS_AS(trivial_code(2, 3), std::invalid_argument);
}

TEST_CASE("classify_error matches brute-force centralizer membership") {
  StabilizerCode code = builtin_422();
  CHECK(classify_error(code, parse_class("IIII")) ==
        ErrorClass::StabilizerPart);
  CHECK(classify_error(code, parse_class("ZZII")) == ErrorClass::LogicalPart);
  CHECK(classify_error(code, parse_class("XIII")) ==
        ErrorClass::DetectablePart);

  GeneratedGroup sl = centralizer_set(code);
  REQUIRE(sl.order() == 64);
  for (const auto& c : enumerate_classes(4)) {
    ErrorClass got = classify_error(code, c);
    if (code.in_stabilizer(c)) {
      CHECK(got == ErrorClass::StabilizerPart);
    } else if (sl.contains(c)) {
      CHECK(got == ErrorClass::LogicalPart);
    } else {
      CHECK(got == ErrorClass::DetectablePart);
    }
  }
}

TEST_CASE("syndrome bits follow declared generator order") {
  StabilizerCode code = builtin_422();
  CHECK(syndrome(code, parse_class("IIII")) == Syndrome{0, 2});
  CHECK(format_syndrome(syndrome(code, parse_class("XIII"))) == "(0,1)");
  CHECK(format_syndrome(syndrome(code, parse_class("IZII"))) == "(1,0)");

  // XOR property under multiplication.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto c1 = class_at(4, rng() % 256);
    auto c2 = class_at(4, rng() % 256);
    CHECK(syndrome(code, multiply(c1, c2)).bits ==
          (syndrome(code, c1).bits ^ syndrome(code, c2).bits));
  }
}

TEST_CASE("classification and syndrome are stabilizer-coset invariants") {
  StabilizerCode code = builtin_422();
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    PauliClass c = class_at(4, rng() % 256);
    for (const auto& s : code.stabilizer_set) {
      PauliClass cs = multiply(c, s);
      CHECK(classify_error(code, cs) == classify_error(code, c));
      CHECK(syndrome(code, cs) == syndrome(code, c));
    }
  }
}

TEST_CASE("partition census matches the closed forms") {
  StabilizerCode code = builtin_422();
  PartitionCensus census = partition_census(code);
  CHECK(census.stabilizer == 4);
  CHECK(census.logical == 60);
  CHECK(census.detectable == 192);
  CHECK(census == partition_census_formula(4, 2));
  CHECK(census == partition_census_serial(code));

  CHECK(partition_census(trivial_code(4, 2)) ==
        partition_census_formula(4, 2));
  PartitionCensus t22 = partition_census(trivial_code(2, 2));
  CHECK(t22.stabilizer == 1);
  CHECK(t22.logical == 15);
  CHECK(t22.detectable == 0);

  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      StabilizerCode t = trivial_code(n, k);
      PartitionCensus c = partition_census(t);
      CHECK(c == partition_census_formula(n, k));
      CHECK(c.total() == class_count(n));
      CHECK(c == partition_census_serial(t));
    }
  }
}

TEST_CASE("Z-only logical classes of the 422 code") {
  StabilizerCode code = builtin_422();
  std::set<std::string> found;
  for (const auto& c : enumerate_classes(4)) {
    if (c.x == 0 && classify_error(code, c) == ErrorClass::LogicalPart) {
      found.insert(format_class(c));
    }
  }
  std::set<std::string> expected = {"IIZZ", "ZIIZ", "ZIZI",
                                    "ZZII", "IZZI", "IZIZ"};
  CHECK(found == expected);
}

TEST_CASE("compute_distance brute force") {
  CHECK(compute_distance(builtin_422()) == 2);
  CHECK(compute_distance(trivial_code(4, 2)) == 1);
  CHECK(compute_distance(trivial_code(1, 1)) == 1);
  CHECK_FALSE(compute_distance(trivial_code(3, 0)).has_value());
  CHECK(compute_distance(builtin_422()) ==
        compute_distance_serial(builtin_422()));
}

TEST_CASE("exhaustive sweeps refuse codes beyond the cap") {
  StabilizerCode big = trivial_code(9, 2);
  CHECK_THROWS_AS(partition_census(big), std::invalid_argument);
  CHECK_THROWS_AS(compute_distance(big), std::invalid_argument);
}

TEST_CASE("code JSON round-trips and rejects malformed records") {
  StabilizerCode code = builtin_422();
  StabilizerCode reloaded = load_code(code_to_json(code));
  CHECK(reloaded.stabilizer_gens == code.stabilizer_gens);
  CHECK(reloaded.logical_x == code.logical_x);
  CHECK(reloaded.logical_z == code.logical_z);

  CHECK_THROWS_AS(load_code("{ not json"), std::invalid_argument);
  CHECK_THROWS_AS(load_code("{\"n\": 4}"), std::invalid_argument);
  CHECK_THROWS_AS(load_code_file("/nonexistent/code.json"),
                  std::invalid_argument);
}

TEST_CASE("resolve_code understands builtin specs") {
  CHECK(resolve_code("builtin:422").name == "[[4,2,2]]");
  CHECK(resolve_code("builtin:trivial-5-2").n == 5);
  CHECK(resolve_code("builtin:422-zfree").k == 2);
  CHECK_THROWS(resolve_code("builtin:trivial-x"));
}
