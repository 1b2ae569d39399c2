#include "symgraph/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace symgraph {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::ScanBudgetExceeded: return "ScanBudgetExceeded";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::UnsupportedConstruction: return "UnsupportedConstruction";
    case ErrorCode::AmbientTooLarge: return "AmbientTooLarge";
    case ErrorCode::PreconditionN7: return "PreconditionN7";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::StabilizerOrderNotDivisibleBy7:
      return "StabilizerOrderNotDivisibleBy7";
    case ErrorCode::InvolutionConditionFailed: return "InvolutionConditionFailed";
    case ErrorCode::VertexBudgetExceeded: return "VertexBudgetExceeded";
    case ErrorCode::Irregular: return "Irregular";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
  }
  return "UnknownError";
}

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Permutation::Permutation(unsigned degree) {
  if (degree == 0 || degree > kMaxDegree)
    raise(ErrorCode::InvalidPermutation,
          "degree must be in [1, " + std::to_string(kMaxDegree) + "], got " +
              std::to_string(degree));
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<uint8_t> images) {
  if (images.empty() || images.size() > kMaxDegree)
    raise(ErrorCode::InvalidPermutation,
          "degree must be in [1, " + std::to_string(kMaxDegree) + "], got " +
              std::to_string(images.size()));
  std::vector<bool> seen(images.size(), false);
  for (uint8_t v : images) {
    if (v >= images.size() || seen[v])
      raise(ErrorCode::InvalidPermutation,
            "images are not a bijection on {0,...," +
                std::to_string(images.size() - 1) + "}");
    seen[v] = true;
  }
  Permutation p(static_cast<unsigned>(images.size()));
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::parse_cycles(std::string_view text, unsigned degree) {
  if (degree == 0 || degree > kMaxDegree)
    raise(ErrorCode::ParseError, "bad degree " + std::to_string(degree));
  std::vector<uint8_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size())
    raise(ErrorCode::ParseError, "empty cycle expression");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      raise(ErrorCode::ParseError, "expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<unsigned> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size())
        raise(ErrorCode::ParseError, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        raise(ErrorCode::ParseError,
              "expected point or ')' at offset " + std::to_string(i));
      unsigned value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned>(text[i] - '0');
        if (value > kMaxDegree)
          raise(ErrorCode::ParseError, "point out of range");
        ++i;
      }
      if (value == 0 || value > degree)
        raise(ErrorCode::ParseError,
              "point " + std::to_string(value) + " outside 1.." +
                  std::to_string(degree));
      unsigned point = value - 1;  // to 0-based
      if (used[point])
        raise(ErrorCode::ParseError,
              "point " + std::to_string(value) + " appears twice");
      used[point] = true;
      cycle.push_back(point);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;  // tolerate comma separators
    }
    for (size_t k = 0; k + 1 < cycle.size(); ++k)
      images[cycle[k]] = static_cast<uint8_t>(cycle[k + 1]);
    if (cycle.size() > 1)
      images[cycle.back()] = static_cast<uint8_t>(cycle.front());
  }
  return from_images(std::move(images));
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    raise(ErrorCode::DegreeMismatch,
          "compose: " + std::to_string(p.degree()) + " vs " +
              std::to_string(q.degree()));
  std::vector<uint8_t> out(p.degree());
  raw::compose_into(p.images(), q.images(), out);
  return Permutation::from_images(std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<uint8_t> out(p.degree());
  raw::invert_into(p.images(), out);
  return Permutation::from_images(std::move(out));
}

Permutation conjugate(const Permutation& p, const Permutation& x) {
  if (p.degree() != x.degree())
    raise(ErrorCode::DegreeMismatch,
          "conjugate: " + std::to_string(p.degree()) + " vs " +
              std::to_string(x.degree()));
  std::vector<uint8_t> x_inv(p.degree());
  raw::invert_into(x.images(), x_inv);
  std::vector<uint8_t> out(p.degree());
  raw::conjugate_into(p.images(), x.images(), x_inv, out);
  return Permutation::from_images(std::move(out));
}

Parity parity(const Permutation& p) {
  // sign = (-1)^(degree - #cycles), fixed points counted as cycles.
  unsigned cycles = 0;
  std::vector<bool> seen(p.degree(), false);
  for (unsigned i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (unsigned j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return ((p.degree() - cycles) % 2 == 0) ? Parity::even : Parity::odd;
}

std::vector<unsigned> cycle_type(const Permutation& p) {
  std::vector<unsigned> lengths;
  std::vector<bool> seen(p.degree(), false);
  for (unsigned i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

uint64_t element_order(const Permutation& p) {
  uint64_t result = 1;
  for (unsigned len : cycle_type(p)) result = std::lcm(result, uint64_t{len});
  return result;
}

bool is_two_element(const Permutation& p) {
  uint64_t n = element_order(p);
  return (n & (n - 1)) == 0;
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (unsigned i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(' << (i + 1);
    seen[i] = true;
    for (unsigned j = p[i]; j != i; j = p[j]) {
      out << ' ' << (j + 1);
      seen[j] = true;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace symgraph
