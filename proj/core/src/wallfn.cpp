#include "logmut/wallfn.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <random>
#include <sstream>

namespace logmut {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(int degree, Rational c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = std::move(c);
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Rational(0);
}

Rational UniPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UniPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool UniPoly::is_monomial() const {
  if (c_.empty()) return false;
  return std::count_if(c_.begin(), c_.end(), [](const Rational& r) { return r != 0; }) == 1;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

std::string UniPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << '*';
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

namespace {

UniPoly poly_mod(UniPoly a, const UniPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rational factor = a.leading() / b.leading();
    a = a - UniPoly::monomial(a.degree() - b.degree(), factor) * b;
  }
  return a;
}

UniPoly make_monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * UniPoly::monomial(0, Rational(1) / p.leading());
}

}  // namespace

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = poly_mod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(Rational c) {
  if (c != 0) terms_[{0, 0}] = std::move(c);
}

BiPoly BiPoly::x(int power) { return term(power, 0, 1); }
BiPoly BiPoly::u(int power) { return term(0, power, 1); }

BiPoly BiPoly::term(int x_exp, int u_exp, Rational c) {
  BiPoly p;
  p.add_term({x_exp, u_exp}, c);
  return p;
}

void BiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool BiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0}); }

Rational BiPoly::coeff(int x_exp, int u_exp) const {
  auto it = terms_.find({x_exp, u_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BiPoly::degree_u() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

namespace {

Rational rational_pow(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Rational BiPoly::eval(const Rational& xv, const Rational& uv) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * rational_pow(xv, e.first) * rational_pow(uv, e.second);
  return acc;
}

UniPoly BiPoly::coeff_in_u(int k) const {
  std::vector<Rational> v(static_cast<std::size_t>(std::max(degree_x(), 0)) + 1, Rational(0));
  for (const auto& [e, c] : terms_) {
    if (e.second == k) v[static_cast<std::size_t>(e.first)] = c;
  }
  return UniPoly(std::move(v));
}

UniPoly BiPoly::coeff_in_x(int k) const { return swapped().coeff_in_u(k); }

BiPoly BiPoly::d_dx() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) r.add_term({e.first - 1, e.second}, c * e.first);
  }
  return r;
}

BiPoly BiPoly::d_du() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) r.add_term({e.first, e.second - 1}, c * e.second);
  }
  return r;
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.add_term({e.second, e.first}, c);
  return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  r += o;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) { return *this = *this * o; }

BiPoly pow(const BiPoly& f, int n) {
  BiPoly r = 1;
  for (int i = 0; i < n; ++i) r *= f;
  return r;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Highest total degree first; within a degree, highest u-degree first.
  std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.second > b.first.second;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool constant = e.first == 0 && e.second == 0;
    bool wrote = false;
    if (constant || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    if (e.first > 0) {
      os << (wrote ? "*" : "") << 'x';
      if (e.first > 1) os << '^' << e.first;
      wrote = true;
    }
    if (e.second > 0) {
      os << (wrote ? "*" : "") << 'u';
      if (e.second > 1) os << '^' << e.second;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  BiPoly parse() {
    BiPoly result;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += term() * BiPoly(Rational(sign));
      skip();
    }
    return result;
  }

 private:
  BiPoly term() {
    BiPoly t = 1;
    bool need_factor = true;
    while (true) {
      skip();
      if (at_end()) break;
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        t *= BiPoly(number());
      } else if (ch == 'x' || ch == 'u') {
        ++pos_;
        int e = exponent();
        t *= ch == 'x' ? BiPoly::x(e) : BiPoly::u(e);
      } else {
        fail(std::string("unexpected '") + ch + "'");
      }
      need_factor = false;
      skip();
      if (!at_end() && peek() == '*') {
        ++pos_;
        need_factor = true;
        continue;
      }
      break;
    }
    if (need_factor) fail("dangling '*' or missing term");
    return t;
  }

  Rational number() {
    std::string num = digits();
    skip();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip();
      std::string den = digits();
      if (den.empty()) fail("missing denominator");
      mpz_class d{den};
      if (d == 0) fail("zero denominator");
      Rational q{mpz_class{num}, d};
      q.canonicalize();
      return q;
    }
    return Rational(mpz_class(num));
  }

  int exponent() {
    skip();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip();
    std::string d = digits();
    if (d.empty() || d.size() > 6) fail("bad exponent");
    return std::stoi(d);
  }

  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(s_[pos_++]);
    if (d.empty()) fail("expected digits");
    return d;
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, "polynomial '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_bipoly(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------- resultants

UniPoly restrict_to_u(const BiPoly& f) { return f.coeff_in_x(0); }

namespace {

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

// Sylvester determinant of p, q with formal degrees m, n (coefficients low
// to high, possibly with vanishing leading coefficient).
Rational sylvester(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  const std::size_t m = p.size() - 1, n = q.size() - 1, size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = p[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = q[n - k];
  return determinant(std::move(s));
}

UniPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  // Newton divided differences, in place.
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UniPoly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * UniPoly({-xs[i], Rational(1)}) + UniPoly::monomial(0, ys[i]);
  }
  return acc;
}

}  // namespace

UniPoly resultant_u(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const int m = f.degree_u(), n = g.degree_u();
  const int bound = m * std::max(g.degree_x(), 0) + n * std::max(f.degree_x(), 0);
  std::vector<UniPoly> fc, gc;
  for (int k = 0; k <= m; ++k) fc.push_back(f.coeff_in_u(k));
  for (int k = 0; k <= n; ++k) gc.push_back(g.coeff_in_u(k));
  std::vector<Rational> xs, ys;
  for (int t = 0; t <= bound; ++t) {
    Rational xv = t;
    std::vector<Rational> p, q;
    for (const auto& c : fc) p.push_back(c.eval(xv));
    for (const auto& c : gc) q.push_back(c.eval(xv));
    xs.push_back(xv);
    ys.push_back(sylvester(p, q));
  }
  return interpolate(xs, std::move(ys));
}

UniPoly resultant_x(const BiPoly& f, const BiPoly& g) { return resultant_u(f.swapped(), g.swapped()); }

// ---------------------------------------------------------------- Groebner

namespace {

using Mono = BiPoly::Exponent;

// Degree-lexicographic, x > u; greater monomials first.
struct MonoGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da > db;
    return a.first > b.first;
  }
};

using GPoly = std::map<Mono, Rational, MonoGreater>;

GPoly to_gpoly(const BiPoly& f) { return GPoly(f.terms().begin(), f.terms().end()); }

bool divides(const Mono& a, const Mono& b) { return a.first <= b.first && a.second <= b.second; }

Mono lcm(const Mono& a, const Mono& b) { return {std::max(a.first, b.first), std::max(a.second, b.second)}; }

void make_monic(GPoly& p) {
  Rational lc = p.begin()->second;
  for (auto& [m, c] : p) c /= lc;
}

// p -= c * x^m.first u^m.second * g
void sub_scaled(GPoly& p, const Rational& c, const Mono& m, const GPoly& g) {
  for (const auto& [e, gc] : g) {
    Mono target{e.first + m.first, e.second + m.second};
    auto [it, inserted] = p.try_emplace(target, 0);
    it->second -= c * gc;
    if (it->second == 0) p.erase(it);
  }
}

GPoly normal_form(GPoly p, const std::vector<GPoly>& basis) {
  GPoly rem;
  while (!p.empty()) {
    auto lead = *p.begin();
    const GPoly* divisor = nullptr;
    for (const auto& g : basis) {
      if (divides(g.begin()->first, lead.first)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      rem.insert(lead);
      p.erase(p.begin());
      continue;
    }
    const auto& [gm, gc] = *divisor->begin();
    sub_scaled(p, lead.second / gc, {lead.first.first - gm.first, lead.first.second - gm.second}, *divisor);
  }
  return rem;
}

GPoly s_polynomial(const GPoly& f, const GPoly& g) {
  const auto& [fm, fc] = *f.begin();
  const auto& [gm, gc] = *g.begin();
  Mono l = lcm(fm, gm);
  GPoly s;
  sub_scaled(s, -Rational(1) / fc, {l.first - fm.first, l.second - fm.second}, f);
  sub_scaled(s, Rational(1) / gc, {l.first - gm.first, l.second - gm.second}, g);
  return s;
}

bool is_unit(const GPoly& p) { return p.size() == 1 && p.begin()->first == Mono{0, 0}; }

}  // namespace

bool generates_unit_ideal(const std::vector<BiPoly>& generators) {
  std::vector<GPoly> basis;
  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    GPoly g = normal_form(to_gpoly(f), basis);
    if (g.empty()) continue;
    make_monic(g);
    if (is_unit(g)) return true;
    basis.push_back(std::move(g));
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Mono& a = basis[i].begin()->first;
    const Mono& b = basis[j].begin()->first;
    // Coprime leading monomials: the S-polynomial reduces to zero.
    if (std::min(a.first, b.first) == 0 && std::min(a.second, b.second) == 0) continue;
    GPoly r = normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (r.empty()) continue;
    make_monic(r);
    if (is_unit(r)) return true;
    basis.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }
  return false;
}

bool is_smooth_curve(const BiPoly& f) {
  if (f.is_zero()) return false;
  const BiPoly fx = f.d_dx(), fu = f.d_du();
  if (f.degree_u() >= 1 && !fu.is_zero() && !fx.is_zero()) {
    UniPoly r1 = resultant_u(f, fu);
    UniPoly r2 = fx.degree_u() >= 0 ? resultant_u(f, fx) : UniPoly{};
    if (!r1.is_zero() && !r2.is_zero() && gcd(r1, r2).degree() == 0) return true;
  }
  return generates_unit_ideal({f, fx, fu});
}

bool proportional(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.terms().size() != g.terms().size()) return false;
  Rational ratio = f.terms().begin()->second / g.terms().begin()->second;
  for (const auto& [e, c] : f.terms()) {
    if (g.coeff(e.first, e.second) * ratio != c) return false;
  }
  return true;
}

// ---------------------------------------------------------------- walls

BiPoly WallFunctions::product() const {
  BiPoly p = 1;
  for (const auto& f : factors) p *= f;
  return p;
}

namespace {

void require_shape(const LogDatum& s, const WallAssignment& w) {
  if (w.walls.size() != s.size()) {
    throw Error(ErrorKind::ShapeMismatch, "datum has " + std::to_string(s.size()) + " edges but " +
                                              std::to_string(w.walls.size()) + " walls were given");
  }
}

// Degree d if p == u^d, otherwise -1.
int power_of_u(const UniPoly& p) {
  if (!p.is_monomial() || p.leading() != 1) return -1;
  return p.degree();
}

}  // namespace

bool joint_compatible(const LogDatum& s, const WallAssignment& w) {
  require_shape(s, w);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (restrict_to_u(w.walls[i].product()) != UniPoly::monomial(static_cast<int>(s[i].length()))) return false;
  }
  return true;
}

SubordinationReport is_subordinate(const LogDatum& s, const WallAssignment& w) {
  require_shape(s, w);
  SubordinationReport report;
  report.subordinate = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& factors = w.walls[i].factors;
    const auto& parts = s[i].partition().parts();
    const std::string wall = "wall " + std::to_string(i + 1);
    if (factors.size() != parts.size()) {
      report.subordinate = false;
      report.problems.push_back(wall + ": " + std::to_string(factors.size()) + " factors for a partition with " +
                                std::to_string(parts.size()) + " parts");
    }
    std::vector<Int> degrees;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      FactorDiagnostic d;
      d.edge = i + 1;
      d.factor = k + 1;
      d.restriction = restrict_to_u(factors[k]);
      int deg = power_of_u(d.restriction);
      d.restriction_is_power_of_u = deg >= 1;
      d.smooth = is_smooth_curve(factors[k]);
      if (!d.restriction_is_power_of_u) {
        report.subordinate = false;
        report.problems.push_back(wall + ", factor " + std::to_string(k + 1) + ": restriction " +
                                  d.restriction.to_string('u') + " is not a positive power of u");
      } else {
        degrees.push_back(deg);
      }
      if (!d.smooth) {
        report.subordinate = false;
        report.problems.push_back(wall + ", factor " + std::to_string(k + 1) + ": zero curve is singular");
      }
      report.factors.push_back(std::move(d));
    }
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    if (degrees.size() == factors.size() && factors.size() == parts.size() && degrees != parts) {
      report.subordinate = false;
      std::ostringstream os;
      os << wall << ": restrictions have degrees " << Partition(degrees) << " but the partition is "
         << s[i].partition();
      report.problems.push_back(os.str());
    }
  }
  return report;
}

GenericityReport is_generic(const LogDatum& s, const WallAssignment& w) {
  if (!is_subordinate(s, w).subordinate) {
    throw Error(ErrorKind::SubordinationRequired, "wall assignment is not subordinate to the datum");
  }
  GenericityReport report;
  report.generic = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& f = w.walls[i].factors;
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b) {
        PairDiagnostic d;
        d.edge = i + 1;
        d.first = a + 1;
        d.second = b + 1;
        d.proportional = proportional(f[a], f[b]);
        d.resultant = resultant_u(f[a], f[b]);
        d.common_component = d.resultant.is_zero() || resultant_x(f[a], f[b]).is_zero();
        d.meets_only_at_origin_globally = !d.common_component && d.resultant.is_monomial();
        if (d.proportional || d.common_component) report.generic = false;
        report.pairs.push_back(std::move(d));
      }
  }
  return report;
}

WallAssignment generic_wall_assignment(const LogDatum& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    Int num = static_cast<Int>(rng() % 9) + 1;
    Int den = static_cast<Int>(rng() % 5) + 1;
    Rational c(num, den);
    c.canonicalize();
    return (rng() & 1) ? Rational(-c) : c;
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    WallAssignment w;
    for (const auto& e : s.edges()) {
      WallFunctions wall;
      std::vector<Rational> used;
      for (Int part : e.partition().parts()) {
        Rational c = draw();
        while (std::find(used.begin(), used.end(), c) != used.end()) c = draw();
        used.push_back(c);
        wall.factors.push_back(BiPoly::u(static_cast<int>(part)) + BiPoly::term(1, 0, c));
      }
      w.walls.push_back(std::move(wall));
    }
    if (is_subordinate(s, w).subordinate && is_generic(s, w).generic) return w;
  }
  throw Error(ErrorKind::InvalidDatum, "could not draw a generic wall assignment");
}

KinkReport kinks(const LogDatum& s) {
  KinkReport r;
  for (const auto& e : s.edges()) r.kinks.push_back(e.length());
  return r;
}

}  // namespace logmut
