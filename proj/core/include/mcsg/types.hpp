#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcsg {

inline constexpr int kMaxColors = 16;
inline constexpr double kRelTol = 1e-9;

// Malformed input or invalid parameters.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A solver declined to run (size guard, budget, limit).
struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Subset of the primary colors 1..k. Bit c-1 stands for color c.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  static constexpr ColorSet from_bits(std::uint32_t bits) {
    ColorSet s;
    s.bits_ = bits;
    return s;
  }
  static ColorSet of(std::initializer_list<int> colors) {
    ColorSet s;
    for (int c : colors) s.add(c);
    return s;
  }
  static constexpr ColorSet all(int k) { return from_bits(k >= 32 ? ~0u : ((1u << k) - 1u)); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int c) const { return c >= 1 && c <= 32 && ((bits_ >> (c - 1)) & 1u); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(ColorSet o) const { return (bits_ & ~o.bits_) == 0; }
  void add(int c) {
    if (c < 1 || c > kMaxColors) throw InputError("color out of range: " + std::to_string(c));
    bits_ |= 1u << (c - 1);
  }
  std::vector<int> colors() const {
    std::vector<int> out;
    for (int c = 1; c <= 32; ++c)
      if (contains(c)) out.push_back(c);
    return out;
  }
  std::string str() const;

  friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr bool operator==(ColorSet a, ColorSet b) = default;
  friend constexpr auto operator<=>(ColorSet a, ColorSet b) = default;

 private:
  std::uint32_t bits_ = 0;
};

struct Point {
  double x = 0;
  double y = 0;
  ColorSet colors;
  bool multichromatic() const { return colors.size() > 1; }
};

struct Instance {
  int k = 1;
  std::vector<Point> points;

  int n() const { return static_cast<int>(points.size()); }
  // Indices of S_c in point order.
  std::vector<int> color_class(int c) const;
};

struct Edge {
  int a = 0;
  int b = 0;
  Edge() = default;
  Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeSet = std::vector<Edge>;

struct Solution {
  std::string algorithm;
  EdgeSet edges;
  double cost = 0;
  std::optional<double> ratio_bound;
};

bool costs_equal(double a, double b, double tol = kRelTol);
// a <= b up to the shared tolerance.
bool cost_leq(double a, double b, double tol = kRelTol);

}  // namespace mcsg
