#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cp2 {

// Variant order is part of the canonical serialization and of boundary signs.
enum class LabelKind : std::uint8_t { Int, Perm, Pair, Mid, GridU, PermU };

/// Symbolic vertex name.
///
///   Int    n                 plain nonnegative integer
///   Perm   nu in V4 \ {e}    stored as nu(1), i.e. 2 = (12)(34), 3 = (13)(24), 4 = (14)(23)
///   Pair   (a, b)            a in 1..4, b in 1..3
///   Mid    (a1 a2 hat, b)    midpoint of the edge (a1,b)(a2,b), a1 < a2
///   GridU  u(a, b)           a, b in Z_3
///   PermU  u(kappa)          kappa a permutation of {0,1,2}, stored by images
///
/// The defaulted ordering compares the kind first and then the payload
/// lexicographically, which is the canonical vertex order everywhere.
class VertexLabel {
 public:
  VertexLabel() = default;

  static VertexLabel integer(std::int64_t n);
  static VertexLabel perm(int partner_of_one);
  static VertexLabel pair(int a, int b);
  static VertexLabel mid(int a1, int a2, int b);
  static VertexLabel grid(int a, int b);
  static VertexLabel perm_u(std::array<int, 3> images);

  LabelKind kind() const noexcept { return kind_; }

  std::int64_t int_value() const;
  // Perm: images of 1..4 under nu.
  std::array<int, 4> perm_images() const;
  int perm_partner() const;
  // Pair / Mid / GridU accessors.
  int a() const;
  int b() const;
  int a1() const;
  int a2() const;
  // PermU: images of 0,1,2.
  std::array<int, 3> perm_u_images() const;

  std::string to_string() const;
  static VertexLabel parse(std::string_view token);

  auto operator<=>(const VertexLabel&) const = default;

 private:
  LabelKind kind_ = LabelKind::Int;
  std::int64_t x_ = 0;
  int y_ = 0;
  int z_ = 0;
};

// Cycle notation for permutations of {0,1,2}: "e", "(01)", "(012)", ...
std::string perm3_cycle_string(std::array<int, 3> images);

}  // namespace cp2
