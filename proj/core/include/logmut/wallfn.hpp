#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "logmut/logdatum.hpp"

namespace logmut {

using Rational = mpq_class;

/// Dense univariate polynomial over Q, coefficients from degree 0 upward,
/// never with a trailing zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly monomial(int degree, Rational c = 1);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int i) const;
  Rational leading() const;
  Rational eval(const Rational& t) const;

  /// c * t^m with c != 0.
  bool is_monomial() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(char var) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero if both are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// Polynomial in the wall coordinates (x, u) of D_i = Spec k[x, u], where
/// x = x^{u_i} and u is the coordinate along the joint.
class BiPoly {
 public:
  using Exponent = std::pair<int, int>;  // (degree in x, degree in u)

  BiPoly() = default;
  BiPoly(Rational c);  // NOLINT: constants convert implicitly
  BiPoly(int c) : BiPoly(Rational(c)) {}  // NOLINT

  static BiPoly x(int power = 1);
  static BiPoly u(int power = 1);
  static BiPoly term(int x_exp, int u_exp, Rational c);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coeff(int x_exp, int u_exp) const;
  /// -1 for the zero polynomial.
  int degree_x() const;
  int degree_u() const;
  int total_degree() const;

  Rational eval(const Rational& x, const Rational& u) const;

  /// Coefficient of u^k as a polynomial in x.
  UniPoly coeff_in_u(int k) const;
  /// Coefficient of x^k as a polynomial in u.
  UniPoly coeff_in_x(int k) const;

  BiPoly d_dx() const;
  BiPoly d_du() const;
  BiPoly swapped() const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Text form "c*x^a*u^b" terms joined by + and -, e.g. "u^2 - 1/2*x".
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  std::map<Exponent, Rational> terms_;
};

BiPoly pow(const BiPoly& f, int n);

/// Parses the text form: terms "c*x^a*u^b" with c an integer or p/q; any
/// factor may be omitted. Throws Parse.
BiPoly parse_bipoly(std::string_view text);

/// f|k[u]: the image under x -> 0.
UniPoly restrict_to_u(const BiPoly& f);

/// Res_u(f, g) as a polynomial in x, from the Sylvester matrix of the formal
/// u-degrees. Evaluated at deg-bound + 1 points and interpolated.
UniPoly resultant_u(const BiPoly& f, const BiPoly& g);
/// Res_x(f, g) as a polynomial in u.
UniPoly resultant_x(const BiPoly& f, const BiPoly& g);

/// f, df/dx, df/du have no common zero over the algebraic closure of Q.
/// A constant gcd of Res_u(f, f_u) and Res_u(f, f_x) settles it; otherwise a
/// Groebner basis of (f, f_x, f_u) is computed.
bool is_smooth_curve(const BiPoly& f);

/// True when the reduced Groebner basis of the ideal is {1}.
bool generates_unit_ideal(const std::vector<BiPoly>& generators);

bool proportional(const BiPoly& f, const BiPoly& g);

struct WallFunctions {
  std::vector<BiPoly> factors;  // f_{i,1}, ..., f_{i,k(i)}
  BiPoly product() const;
};

/// Wall functions for every edge, in the datum's counterclockwise order.
struct WallAssignment {
  std::vector<WallFunctions> walls;
};

/// For every i: (prod_k f_{i,k})|k[u] = u^{l_i}. Throws ShapeMismatch.
bool joint_compatible(const LogDatum& s, const WallAssignment& w);

struct FactorDiagnostic {
  std::size_t edge = 0;    // 1-based
  std::size_t factor = 0;  // 1-based
  UniPoly restriction;
  bool restriction_is_power_of_u = false;
  bool smooth = false;
};

struct SubordinationReport {
  bool subordinate = false;
  std::vector<FactorDiagnostic> factors;
  std::vector<std::string> problems;
};

/// Each wall has k(i) factors whose restrictions are u^{l_{i,k}} (matched to
/// the parts as a multiset) and whose zero curves are smooth.
/// Throws ShapeMismatch.
SubordinationReport is_subordinate(const LogDatum& s, const WallAssignment& w);

struct PairDiagnostic {
  std::size_t edge = 0;
  std::size_t first = 0;
  std::size_t second = 0;
  bool proportional = false;
  bool common_component = false;
  UniPoly resultant;  // Res_u(f_{i,k}, f_{i,k'}) in x
  bool meets_only_at_origin_globally = false;
};

struct GenericityReport {
  bool generic = false;
  std::vector<PairDiagnostic> pairs;
};

/// Within each wall the factor curves are pairwise distinct and share no
/// component, so near the origin they meet only there (their points on the
/// joint x = 0 are the origin by the restriction condition). The per-pair
/// flag `meets_only_at_origin_globally` reports whether Res_u is c*x^m.
/// Throws SubordinationRequired if w is not subordinate to s.
GenericityReport is_generic(const LogDatum& s, const WallAssignment& w);

/// f_{i,k} = u^{l_{i,k}} + c_{i,k} x with small nonzero rationals c_{i,k},
/// pairwise distinct on each wall; deterministic in `seed`.
WallAssignment generic_wall_assignment(const LogDatum& s, std::uint64_t seed);

struct KinkReport {
  std::vector<Int> kinks;
};

KinkReport kinks(const LogDatum& s);

}  // namespace logmut
