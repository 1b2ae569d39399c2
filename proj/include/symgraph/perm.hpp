#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symgraph/error.hpp"

namespace symgraph {

// Composition convention, fixed across the whole library and all file
// formats: products apply the LEFT factor first, i.e. compose(p, q) maps
// i to q(p(i)), and conjugation is p^x = x^-1 * p * x. Points are 0-based
// in memory and 1-based in cycle notation.
//
// Degrees are capped at 255 so one point fits in a byte; every group this
// library targets acts on at most 112 points.
inline constexpr unsigned kMaxDegree = 255;

enum class Parity : uint8_t { even = 0, odd = 1 };

inline Parity operator^(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
}

const char* to_string(Parity p);

class Permutation {
public:
  // Identity on `degree` points.
  explicit Permutation(unsigned degree);

  // Validates that `images` is a bijection on {0,...,degree-1}.
  static Permutation from_images(std::vector<uint8_t> images);

  // Parses 1-based cycle notation, e.g. "(1 2 3)(4 5)"; "()" is the
  // identity. Fixed points may be omitted. Round-trips with to_cycle_string.
  static Permutation parse_cycles(std::string_view text, unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  uint8_t operator[](unsigned point) const { return images_[point]; }
  std::span<const uint8_t> images() const { return images_; }

  bool is_identity() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  // Lexicographic order on image arrays (degrees must match to be comparable;
  // shorter degree sorts first).
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

private:
  std::vector<uint8_t> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// x^-1 * p * x
Permutation conjugate(const Permutation& p, const Permutation& x);

Parity parity(const Permutation& p);

// Cycle lengths including fixed points, sorted descending; sums to degree().
std::vector<unsigned> cycle_type(const Permutation& p);

// lcm of cycle lengths.
uint64_t element_order(const Permutation& p);

bool is_two_element(const Permutation& p);  // order is a power of 2

std::string to_cycle_string(const Permutation& p);

// Raw-buffer kernels for scan loops; out must not alias inputs.
namespace raw {

inline void compose_into(std::span<const uint8_t> p, std::span<const uint8_t> q,
                         std::span<uint8_t> out) {
  const size_t n = p.size();
  for (size_t i = 0; i < n; ++i) out[i] = q[p[i]];
}

inline void invert_into(std::span<const uint8_t> p, std::span<uint8_t> out) {
  const size_t n = p.size();
  for (size_t i = 0; i < n; ++i) out[p[i]] = static_cast<uint8_t>(i);
}

// x^-1 * p * x, given both x and x^-1.
inline void conjugate_into(std::span<const uint8_t> p, std::span<const uint8_t> x,
                           std::span<const uint8_t> x_inv, std::span<uint8_t> out) {
  const size_t n = p.size();
  for (size_t i = 0; i < n; ++i) out[i] = x[p[x_inv[i]]];
}

}  // namespace raw

}  // namespace symgraph
