#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "logmut/error.hpp"

namespace logmut {

using Int = std::int64_t;

namespace checked {

// Overflow raises Error(ErrorKind::Overflow); nothing here ever wraps.
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
Int neg(Int a);

}  // namespace checked

Int gcd(Int a, Int b);

/// A vector of the oriented lattice L = Z^2 in a fixed oriented basis.
struct LatticeVec {
  Int x = 0;
  Int y = 0;

  constexpr LatticeVec() = default;
  constexpr LatticeVec(Int x_, Int y_) : x(x_), y(y_) {}

  constexpr bool is_zero() const { return x == 0 && y == 0; }

  friend constexpr bool operator==(const LatticeVec&, const LatticeVec&) = default;
  friend constexpr auto operator<=>(const LatticeVec&, const LatticeVec&) = default;
};

LatticeVec operator+(LatticeVec a, LatticeVec b);
LatticeVec operator-(LatticeVec a, LatticeVec b);
LatticeVec operator-(LatticeVec a);
LatticeVec operator*(Int s, LatticeVec v);

std::ostream& operator<<(std::ostream& os, const LatticeVec& v);
std::string to_string(const LatticeVec& v);

/// The symplectic form {a, b} = a.x b.y - a.y b.x, so {e1, e2} = 1.
Int sform(LatticeVec a, LatticeVec b);

/// a_+ : n for n >= 0, otherwise 0.
constexpr Int pos_part(Int n) noexcept { return n > 0 ? n : 0; }

struct PrimitiveSplit {
  Int length;            // lattice length, gcd(|x|, |y|)
  LatticeVec direction;  // primitive, e = length * direction
};

/// Writes e = length * direction with direction primitive.
/// Throws ErrorKind::ZeroVector on e = 0.
PrimitiveSplit primitive_split(LatticeVec e);

bool is_primitive(LatticeVec v);

/// x + {u, x}_+ u. Identity on the closed half-plane {u, x} <= 0 and the
/// unimodular shear x -> x + {u, x} u on the other side.
LatticeVec shear_positive(LatticeVec u, LatticeVec x);

/// Orientation-preserving lattice automorphism [[a, b], [c, d]] with
/// ad - bc = 1, acting on column vectors.
class UnimodularMap {
 public:
  constexpr UnimodularMap() = default;

  /// Throws ErrorKind::InvalidDatum unless ad - bc = 1.
  UnimodularMap(Int a, Int b, Int c, Int d);

  static UnimodularMap identity() { return {}; }

  /// The unique map sending the primitive vector u to (1, 0) whose second
  /// column is chosen by the extended Euclidean algorithm.
  static UnimodularMap to_first_basis_vector(LatticeVec u);

  /// [[1, t], [0, 1]].
  static UnimodularMap shear(Int t);

  Int a() const { return a_; }
  Int b() const { return b_; }
  Int c() const { return c_; }
  Int d() const { return d_; }

  UnimodularMap inverse() const;

  friend UnimodularMap operator*(const UnimodularMap& lhs, const UnimodularMap& rhs);
  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

 private:
  Int a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

LatticeVec apply_map(const UnimodularMap& m, LatticeVec v);

/// Exact counterclockwise angular order starting at the ray through (1, 0):
/// true when the angle of a in [0, 2pi) is smaller than that of b.
bool angle_less(LatticeVec a, LatticeVec b);

}  // namespace logmut
