#include "logmut/lattice.hpp"

#include <ostream>
#include <sstream>

namespace logmut {

namespace checked {

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer addition");
  return r;
}

Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer subtraction");
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer multiplication");
  return r;
}

Int neg(Int a) { return sub(0, a); }

}  // namespace checked

Int gcd(Int a, Int b) {
  a = a < 0 ? checked::neg(a) : a;
  b = b < 0 ? checked::neg(b) : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

LatticeVec operator+(LatticeVec a, LatticeVec b) {
  return {checked::add(a.x, b.x), checked::add(a.y, b.y)};
}

LatticeVec operator-(LatticeVec a, LatticeVec b) {
  return {checked::sub(a.x, b.x), checked::sub(a.y, b.y)};
}

LatticeVec operator-(LatticeVec a) { return {checked::neg(a.x), checked::neg(a.y)}; }

LatticeVec operator*(Int s, LatticeVec v) { return {checked::mul(s, v.x), checked::mul(s, v.y)}; }

std::ostream& operator<<(std::ostream& os, const LatticeVec& v) {
  return os << '(' << v.x << ',' << v.y << ')';
}

std::string to_string(const LatticeVec& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Int sform(LatticeVec a, LatticeVec b) {
  return checked::sub(checked::mul(a.x, b.y), checked::mul(a.y, b.x));
}

PrimitiveSplit primitive_split(LatticeVec e) {
  if (e.is_zero()) throw Error(ErrorKind::ZeroVector, "primitive_split of (0,0)");
  Int g = gcd(e.x, e.y);
  return {g, {e.x / g, e.y / g}};
}

bool is_primitive(LatticeVec v) { return !v.is_zero() && gcd(v.x, v.y) == 1; }

LatticeVec shear_positive(LatticeVec u, LatticeVec x) {
  Int s = pos_part(sform(u, x));
  if (s == 0) return x;
  return x + s * u;
}

UnimodularMap::UnimodularMap(Int a, Int b, Int c, Int d) : a_(a), b_(b), c_(c), d_(d) {
  if (checked::sub(checked::mul(a, d), checked::mul(b, c)) != 1) {
    throw Error(ErrorKind::InvalidDatum, "unimodular map must have determinant +1");
  }
}

namespace {

// s*a + t*b = gcd(a, b) >= 0
void extended_gcd(Int a, Int b, Int& s, Int& t) {
  Int old_r = a, r = b;
  Int old_s = 1, cur_s = 0;
  Int old_t = 0, cur_t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = checked::sub(old_r, checked::mul(q, r));
    old_r = r;
    r = tmp;
    tmp = checked::sub(old_s, checked::mul(q, cur_s));
    old_s = cur_s;
    cur_s = tmp;
    tmp = checked::sub(old_t, checked::mul(q, cur_t));
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_s = checked::neg(old_s);
    old_t = checked::neg(old_t);
  }
  s = old_s;
  t = old_t;
}

}  // namespace

UnimodularMap UnimodularMap::to_first_basis_vector(LatticeVec u) {
  if (!is_primitive(u)) throw Error(ErrorKind::InvalidDatum, "direction " + to_string(u) + " is not primitive");
  Int s, t;
  extended_gcd(u.x, u.y, s, t);
  // M = [[u.x, -t], [u.y, s]] has det 1 and sends (1,0) to u; return M^-1.
  return UnimodularMap(s, t, checked::neg(u.y), u.x);
}

UnimodularMap UnimodularMap::shear(Int t) { return UnimodularMap(1, t, 0, 1); }

UnimodularMap UnimodularMap::inverse() const {
  return UnimodularMap(d_, checked::neg(b_), checked::neg(c_), a_);
}

UnimodularMap operator*(const UnimodularMap& l, const UnimodularMap& r) {
  using namespace checked;
  return UnimodularMap(add(mul(l.a_, r.a_), mul(l.b_, r.c_)), add(mul(l.a_, r.b_), mul(l.b_, r.d_)),
                       add(mul(l.c_, r.a_), mul(l.d_, r.c_)), add(mul(l.c_, r.b_), mul(l.d_, r.d_)));
}

LatticeVec apply_map(const UnimodularMap& m, LatticeVec v) {
  using namespace checked;
  return {add(mul(m.a(), v.x), mul(m.b(), v.y)), add(mul(m.c(), v.x), mul(m.d(), v.y))};
}

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_plane(LatticeVec v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

}  // namespace

bool angle_less(LatticeVec a, LatticeVec b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return sform(a, b) > 0;
}

}  // namespace logmut
