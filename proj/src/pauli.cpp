#include "qldd/pauli.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>

namespace qldd {

namespace {

constexpr int kMaxQubits = 16;

void check_size(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, 16], got " +
                                std::to_string(n));
  }
}

int parity(uint32_t v) { return std::popcount(v) & 1; }

char component_bits(int xbit, int zbit) {
  static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
  return table[xbit | (zbit << 1)];
}

}  // namespace

uint64_t class_key(const PauliClass& c) {
  return (static_cast<uint64_t>(c.x) << c.n) | c.z;
}

uint64_t class_count(int n) {
  check_size(n);
  return uint64_t{1} << (2 * n);
}

PauliClass class_at(int n, uint64_t idx) {
  check_size(n);
  uint32_t mask = (n == 32) ? ~0u : ((1u << n) - 1);
  return PauliClass{n, static_cast<uint32_t>(idx >> n),
                    static_cast<uint32_t>(idx) & mask};
}

std::vector<PauliClass> enumerate_classes(int n) {
  check_size(n);
  if (n > 8) {
    throw std::invalid_argument(
        "enumerate_classes is capped at n <= 8; use class_at to stream");
  }
  std::vector<PauliClass> out;
  out.reserve(class_count(n));
  for (uint64_t idx = 0; idx < class_count(n); ++idx) {
    out.push_back(class_at(n, idx));
  }
  return out;
}

PauliOperator identity_op(int n) {
  check_size(n);
  return PauliOperator{n, 0, 0, 0};
}

PauliOperator single_qubit_op(int n, int qubit, char kind) {
  check_size(n);
  if (qubit < 1 || qubit > n) {
    throw std::invalid_argument("qubit index out of range");
  }
  uint32_t bit = 1u << (qubit - 1);
  switch (kind) {
    case 'X':
      return PauliOperator{n, bit, 0, 0};
    case 'Z':
      return PauliOperator{n, 0, bit, 0};
    case 'Y':
      return PauliOperator{n, bit, bit, 1};
    default:
      throw std::invalid_argument("unknown Pauli kind");
  }
}

PauliOperator parse_pauli(const std::string& text) {
  size_t pos = 0;
  int display = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    display = (text[pos] == '-') ? 2 : 0;
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      display += 1;
      ++pos;
    }
  }
  std::string body = text.substr(pos);
  if (body.empty()) {
    throw std::invalid_argument("Pauli string has no qubit characters: \"" +
                                text + "\"");
  }
  if (body.size() > kMaxQubits) {
    throw std::invalid_argument("Pauli string longer than 16 qubits");
  }
  PauliOperator p;
  p.n = static_cast<int>(body.size());
  int y_count = 0;
  for (size_t j = 0; j < body.size(); ++j) {
    uint32_t bit = 1u << j;
    switch (body[j]) {
      case 'I':
        break;
      case 'X':
        p.x |= bit;
        break;
      case 'Z':
        p.z |= bit;
        break;
      case 'Y':
        p.x |= bit;
        p.z |= bit;
        ++y_count;
        break;
      default:
        throw std::invalid_argument(std::string("illegal Pauli character '") +
                                    body[j] + "' in \"" + text + "\"");
    }
  }
  p.phase_exp = (display + y_count) & 3;
  return p;
}

PauliClass parse_class(const std::string& text) {
  return pauli_class(parse_pauli(text));
}

std::string format_pauli(const PauliOperator& p) {
  static const char* prefix[4] = {"+", "+i", "-", "-i"};
  int y_count = std::popcount(p.x & p.z);
  int display = ((p.phase_exp - y_count) % 4 + 4) % 4;
  std::string out = prefix[display];
  for (int j = 0; j < p.n; ++j) {
    out += component_bits((p.x >> j) & 1, (p.z >> j) & 1);
  }
  return out;
}

std::string format_class(const PauliClass& c) {
  std::string out;
  for (int j = 0; j < c.n; ++j) {
    out += component_bits((c.x >> j) & 1, (c.z >> j) & 1);
  }
  return out;
}

char component(const PauliOperator& p, int qubit) {
  return component_bits((p.x >> (qubit - 1)) & 1, (p.z >> (qubit - 1)) & 1);
}

char component(const PauliClass& p, int qubit) {
  return component_bits((p.x >> (qubit - 1)) & 1, (p.z >> (qubit - 1)) & 1);
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("Pauli size mismatch in multiply");
  }
  // Moving b's X block left across a's Z block picks up (-1) per overlap.
  PauliOperator r;
  r.n = a.n;
  r.x = a.x ^ b.x;
  r.z = a.z ^ b.z;
  r.phase_exp = (a.phase_exp + b.phase_exp + 2 * parity(a.z & b.x)) & 3;
  return r;
}

PauliClass multiply(const PauliClass& a, const PauliClass& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("Pauli size mismatch in multiply");
  }
  return PauliClass{a.n, a.x ^ b.x, a.z ^ b.z};
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("Pauli size mismatch in commutes");
  }
  return (parity(a.x & b.z) ^ parity(a.z & b.x)) == 0;
}

bool commutes(const PauliClass& a, const PauliClass& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("Pauli size mismatch in commutes");
  }
  return (parity(a.x & b.z) ^ parity(a.z & b.x)) == 0;
}

bool commutes(const PauliClass& a, const PauliOperator& b) {
  return commutes(a, pauli_class(b));
}

int weight(const PauliClass& p) { return std::popcount(p.x | p.z); }

int weight(const PauliOperator& p) { return std::popcount(p.x | p.z); }

bool is_hermitian(const PauliOperator& p) {
  return ((p.phase_exp + std::popcount(p.x & p.z)) & 1) == 0;
}

int sign_of(const PauliOperator& p) {
  int y_count = std::popcount(p.x & p.z);
  int display = ((p.phase_exp - y_count) % 4 + 4) % 4;
  if (display & 1) {
    throw std::invalid_argument("sign_of called on non-Hermitian Pauli " +
                                format_pauli(p));
  }
  return display == 0 ? 1 : -1;
}

PauliClass pauli_class(const PauliOperator& p) {
  return PauliClass{p.n, p.x, p.z};
}

bool GeneratedGroup::contains(const PauliClass& c) const {
  return std::binary_search(
      elements.begin(), elements.end(), c,
      [](const PauliClass& a, const PauliClass& b) {
        return class_key(a) < class_key(b);
      });
}

GeneratedGroup generate_group(int n, const std::vector<PauliClass>& generators,
                              uint64_t cap) {
  check_size(n);
  for (const auto& g : generators) {
    if (g.n != n) {
      throw std::invalid_argument("mixed qubit counts in generator set");
    }
  }
  GeneratedGroup group;
  group.n = n;
  group.generators = generators;

  PauliClass id{n, 0, 0};
  std::set<uint64_t> seen{class_key(id)};
  std::deque<PauliClass> frontier{id};
  group.elements.push_back(id);
  while (!frontier.empty()) {
    PauliClass e = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      PauliClass p = multiply(e, g);
      if (seen.insert(class_key(p)).second) {
        if (group.elements.size() + 1 > cap) {
          throw std::runtime_error("group closure exceeds cap of " +
                                   std::to_string(cap));
        }
        group.elements.push_back(p);
        frontier.push_back(p);
      }
    }
  }
  std::sort(group.elements.begin(), group.elements.end(),
            [](const PauliClass& a, const PauliClass& b) {
              return class_key(a) < class_key(b);
            });
  return group;
}

}  // namespace qldd
