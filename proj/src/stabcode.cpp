#include "qldd/stabcode.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qldd {

namespace {

using nlohmann::json;

std::vector<PauliOperator> parse_all(const std::vector<std::string>& texts,
                                     int n, const char* what) {
  std::vector<PauliOperator> ops;
  ops.reserve(texts.size());
  for (const auto& t : texts) {
    PauliOperator p = parse_pauli(t);
    if (p.n != n) {
      throw std::invalid_argument(std::string(what) + " \"" + t +
                                  "\" does not act on " + std::to_string(n) +
                                  " qubits");
    }
    if (!is_hermitian(p)) {
      throw std::invalid_argument(std::string(what) + " \"" + t +
                                  "\" is not Hermitian");
    }
    ops.push_back(p);
  }
  return ops;
}

// Sign-tracked closure of the stabilizer generators. Rejects -I (the same
// projective class reached with two phases) and dependent generators.
std::vector<PauliClass> stabilizer_closure(
    const std::vector<PauliOperator>& gens, int n, int k) {
  std::map<uint64_t, int> phase_by_class;
  std::deque<PauliOperator> frontier;
  PauliOperator id = identity_op(n);
  phase_by_class[class_key(pauli_class(id))] = 0;
  frontier.push_back(id);
  std::vector<PauliClass> elements{pauli_class(id)};
  const uint64_t limit = uint64_t{1} << (n - k);
  while (!frontier.empty()) {
    PauliOperator e = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      PauliOperator p = multiply(e, g);
      uint64_t key = class_key(pauli_class(p));
      auto it = phase_by_class.find(key);
      if (it == phase_by_class.end()) {
        phase_by_class[key] = p.phase_exp;
        elements.push_back(pauli_class(p));
        frontier.push_back(p);
        if (elements.size() > limit) {
          throw std::invalid_argument(
              "stabilizer closure exceeds 2^(n-k); generators are "
              "inconsistent with k");
        }
      } else if (it->second != p.phase_exp) {
        throw std::invalid_argument(
            "stabilizer group contains -I (element " +
            format_pauli(p) + " also reachable with phase i^" +
            std::to_string(it->second) + ")");
      }
    }
  }
  if (elements.size() != limit) {
    throw std::invalid_argument(
        "stabilizer generators are not independent: closure has " +
        std::to_string(elements.size()) + " classes, expected " +
        std::to_string(limit));
  }
  std::sort(elements.begin(), elements.end(),
            [](const PauliClass& a, const PauliClass& b) {
              return class_key(a) < class_key(b);
            });
  return elements;
}

void check_canonical_pattern(const StabilizerCode& code) {
  for (int i = 0; i < code.k; ++i) {
    for (int j = 0; j < code.k; ++j) {
      bool want_commute = (i != j);
      if (commutes(code.logical_x[i], code.logical_z[j]) != want_commute) {
        throw std::invalid_argument(
            "canonical commutation pattern violated between X-bar_" +
            std::to_string(i + 1) + " and Z-bar_" + std::to_string(j + 1));
      }
      if (!commutes(code.logical_x[i], code.logical_x[j]) ||
          !commutes(code.logical_z[i], code.logical_z[j])) {
        throw std::invalid_argument(
            "logical generators of the same type must commute");
      }
    }
  }
  for (const auto& s : code.stabilizer_gens) {
    for (const auto& l : code.logical_x) {
      if (!commutes(s, l)) {
        throw std::invalid_argument("logical " + format_pauli(l) +
                                    " anticommutes with stabilizer " +
                                    format_pauli(s));
      }
    }
    for (const auto& l : code.logical_z) {
      if (!commutes(s, l)) {
        throw std::invalid_argument("logical " + format_pauli(l) +
                                    " anticommutes with stabilizer " +
                                    format_pauli(s));
      }
    }
  }
}

}  // namespace

bool StabilizerCode::in_stabilizer(const PauliClass& c) const {
  return std::binary_search(
      stabilizer_set.begin(), stabilizer_set.end(), c,
      [](const PauliClass& a, const PauliClass& b) {
        return class_key(a) < class_key(b);
      });
}

const char* to_string(ErrorClass c) {
  switch (c) {
    case ErrorClass::StabilizerPart:
      return "stabilizer";
    case ErrorClass::LogicalPart:
      return "logical";
    case ErrorClass::DetectablePart:
      return "detectable";
  }
  return "?";
}

std::string format_syndrome(const Syndrome& s) {
  std::string out = "(";
  for (int j = 0; j < s.length; ++j) {
    if (j) out += ",";
    out += ((s.bits >> j) & 1) ? "1" : "0";
  }
  return out + ")";
}

StabilizerCode make_code(std::string name, int n, int k,
                         std::vector<std::string> stabilizers,
                         std::vector<std::string> logical_x,
                         std::vector<std::string> logical_z) {
  if (n < 1 || n > 16 || k < 0 || k > n) {
    throw std::invalid_argument("invalid code parameters n=" +
                                std::to_string(n) + ", k=" + std::to_string(k));
  }
  if (static_cast<int>(stabilizers.size()) != n - k) {
    throw std::invalid_argument("expected " + std::to_string(n - k) +
                                " stabilizer generators, got " +
                                std::to_string(stabilizers.size()));
  }
  if (static_cast<int>(logical_x.size()) != k ||
      static_cast<int>(logical_z.size()) != k) {
    throw std::invalid_argument("expected " + std::to_string(k) +
                                " logical X and Z generators");
  }
  StabilizerCode code;
  code.name = std::move(name);
  code.n = n;
  code.k = k;
  code.stabilizer_gens = parse_all(stabilizers, n, "stabilizer generator");
  code.logical_x = parse_all(logical_x, n, "logical X generator");
  code.logical_z = parse_all(logical_z, n, "logical Z generator");

  for (size_t i = 0; i < code.stabilizer_gens.size(); ++i) {
    for (size_t j = i + 1; j < code.stabilizer_gens.size(); ++j) {
      if (!commutes(code.stabilizer_gens[i], code.stabilizer_gens[j])) {
        throw std::invalid_argument(
            "anticommuting stabilizer generators " +
            format_pauli(code.stabilizer_gens[i]) + " and " +
            format_pauli(code.stabilizer_gens[j]));
      }
    }
  }
  code.stabilizer_set = stabilizer_closure(code.stabilizer_gens, n, k);
  check_canonical_pattern(code);
  return code;
}

StabilizerCode load_code(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed code file: ") +
                                e.what());
  }
  try {
    return make_code(j.value("name", "unnamed"), j.at("n").get<int>(),
                     j.at("k").get<int>(),
                     j.at("stabilizers").get<std::vector<std::string>>(),
                     j.at("logical_x").get<std::vector<std::string>>(),
                     j.at("logical_z").get<std::vector<std::string>>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed code record: ") +
                                e.what());
  }
}

StabilizerCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open code file " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return load_code(ss.str());
}

std::string code_to_json(const StabilizerCode& code) {
  json j;
  j["name"] = code.name;
  j["n"] = code.n;
  j["k"] = code.k;
  auto dump = [](const std::vector<PauliOperator>& ops) {
    std::vector<std::string> out;
    for (const auto& p : ops) out.push_back(format_pauli(p));
    return out;
  };
  j["stabilizers"] = dump(code.stabilizer_gens);
  j["logical_x"] = dump(code.logical_x);
  j["logical_z"] = dump(code.logical_z);
  return j.dump(2);
}

StabilizerCode builtin_422() {
  return make_code("[[4,2,2]]", 4, 2, {"+XXXX", "+ZZZZ"}, {"+XIIX", "+IIXX"},
                   {"+IIZZ", "+ZIIZ"});
}

StabilizerCode builtin_422_unencoder_walkthrough() {
  return make_code("[[4,2,2]]-walkthrough", 4, 2, {"+XXXX", "+ZZZZ"},
                   {"+XIIX", "+XXII"}, {"+ZZII", "+ZIIZ"});
}

StabilizerCode builtin_422_zfree() {
  // Logicals obtained from the builtin choice by stabilizer multiplication:
  // X1*XXXX, X2*XXXX, Z1*XXXX, Z2*ZZZZ.
  return make_code("[[4,2,2]]-zfree", 4, 2, {"+XXXX", "+ZZZZ"},
                   {"+IXXI", "+XXII"}, {"-XXYY", "+IZZI"});
}

StabilizerCode trivial_code(int n, int k) {
  if (k > n || k < 0) {
    throw std::invalid_argument("trivial code requires 0 <= k <= n");
  }
  auto str_for = [n](int qubit, char kind) {
    std::string s(n, 'I');
    s[qubit - 1] = kind;
    return "+" + s;
  };
  std::vector<std::string> stabs, lx, lz;
  for (int q = k + 1; q <= n; ++q) stabs.push_back(str_for(q, 'Z'));
  for (int q = 1; q <= k; ++q) {
    lx.push_back(str_for(q, 'X'));
    lz.push_back(str_for(q, 'Z'));
  }
  return make_code("trivial-" + std::to_string(n) + "-" + std::to_string(k), n,
                   k, stabs, lx, lz);
}

StabilizerCode resolve_code(const std::string& spec) {
  if (spec == "builtin:422") return builtin_422();
  if (spec == "builtin:422-zfree") return builtin_422_zfree();
  if (spec == "builtin:422-walkthrough")
    return builtin_422_unencoder_walkthrough();
  if (spec.rfind("builtin:trivial-", 0) == 0) {
    std::string rest = spec.substr(16);
    auto dash = rest.find('-');
    if (dash == std::string::npos) {
      throw std::invalid_argument("expected builtin:trivial-N-K");
    }
    return trivial_code(std::stoi(rest.substr(0, dash)),
                        std::stoi(rest.substr(dash + 1)));
  }
  return load_code_file(spec);
}

Syndrome syndrome(const StabilizerCode& code, const PauliClass& p) {
  if (p.n != code.n) {
    throw std::invalid_argument("Pauli size does not match code");
  }
  Syndrome s;
  s.length = code.n - code.k;
  for (int j = 0; j < s.length; ++j) {
    if (!commutes(p, code.stabilizer_gens[j])) {
      s.bits |= 1u << j;
    }
  }
  return s;
}

ErrorClass classify_error(const StabilizerCode& code, const PauliClass& p) {
  if (syndrome(code, p).bits != 0) {
    return ErrorClass::DetectablePart;
  }
  return code.in_stabilizer(p) ? ErrorClass::StabilizerPart
                               : ErrorClass::LogicalPart;
}

PartitionCensus partition_census_serial(const StabilizerCode& code) {
  if (code.n > 8) {
    throw std::invalid_argument("exhaustive census requires n <= 8");
  }
  PartitionCensus census;
  for (uint64_t idx = 0; idx < class_count(code.n); ++idx) {
    switch (classify_error(code, class_at(code.n, idx))) {
      case ErrorClass::StabilizerPart:
        ++census.stabilizer;
        break;
      case ErrorClass::LogicalPart:
        ++census.logical;
        break;
      case ErrorClass::DetectablePart:
        ++census.detectable;
        break;
    }
  }
  return census;
}

PartitionCensus partition_census(const StabilizerCode& code) {
  if (code.n > 8) {
    throw std::invalid_argument("exhaustive census requires n <= 8");
  }
  const int64_t total = static_cast<int64_t>(class_count(code.n));
  uint64_t stab = 0, log = 0, det = 0;
#pragma omp parallel for reduction(+ : stab, log, det) schedule(static)
  for (int64_t idx = 0; idx < total; ++idx) {
    switch (classify_error(code, class_at(code.n, idx))) {
      case ErrorClass::StabilizerPart:
        ++stab;
        break;
      case ErrorClass::LogicalPart:
        ++log;
        break;
      case ErrorClass::DetectablePart:
        ++det;
        break;
    }
  }
  return PartitionCensus{stab, log, det};
}

PartitionCensus partition_census_formula(int n, int k) {
  PartitionCensus c;
  c.stabilizer = uint64_t{1} << (n - k);
  c.logical = (uint64_t{1} << (n - k)) * ((uint64_t{1} << (2 * k)) - 1);
  c.detectable = (uint64_t{1} << (n + k)) * ((uint64_t{1} << (n - k)) - 1);
  return c;
}

std::optional<int> compute_distance_serial(const StabilizerCode& code) {
  if (code.n > 8) {
    throw std::invalid_argument("exhaustive distance requires n <= 8");
  }
  if (code.k == 0) return std::nullopt;
  int best = code.n + 1;
  for (uint64_t idx = 0; idx < class_count(code.n); ++idx) {
    PauliClass c = class_at(code.n, idx);
    if (classify_error(code, c) == ErrorClass::LogicalPart) {
      best = std::min(best, weight(c));
    }
  }
  return best;
}

std::optional<int> compute_distance(const StabilizerCode& code) {
  if (code.n > 8) {
    throw std::invalid_argument("exhaustive distance requires n <= 8");
  }
  if (code.k == 0) return std::nullopt;
  const int64_t total = static_cast<int64_t>(class_count(code.n));
  int best = code.n + 1;
#pragma omp parallel for reduction(min : best) schedule(static)
  for (int64_t idx = 0; idx < total; ++idx) {
    PauliClass c = class_at(code.n, idx);
    if (classify_error(code, c) == ErrorClass::LogicalPart) {
      best = std::min(best, weight(c));
    }
  }
  return best;
}

}  // namespace qldd
