#include "logmut/logdatum.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

namespace logmut {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

Partition::Partition(std::vector<Int> parts) {
  for (Int p : parts) {
    if (p < 0) throw Error(ErrorKind::InvalidPartition, "negative part " + std::to_string(p));
    if (p > 0) parts_.push_back(p);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::ones(Int n) { return Partition(std::vector<Int>(static_cast<std::size_t>(n), 1)); }

Int Partition::sum() const {
  Int s = 0;
  for (Int p : parts_) s = checked::add(s, p);
  return s;
}

Partition Partition::without_one(Int value) const {
  Partition out = *this;
  auto it = std::find(out.parts_.begin(), out.parts_.end(), value);
  if (it != out.parts_.end()) out.parts_.erase(it);
  return out;
}

Partition Partition::with(Int value) const {
  if (value == 0) return *this;
  std::vector<Int> parts = parts_;
  parts.push_back(value);
  return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

std::vector<Partition> partitions_of(Int n) {
  std::vector<Partition> out;
  std::vector<Int> current;
  std::function<void(Int, Int)> rec = [&](Int remaining, Int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (Int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (n > 0) rec(n, n);
  return out;
}

// ---------------------------------------------------------------- Edge

Edge::Edge(LatticeVec e, Partition nu) : e_(e), nu_(std::move(nu)) {
  auto split = primitive_split(e);
  u_ = split.direction;
  length_ = split.length;
  if (nu_.sum() != length_) {
    throw Error(ErrorKind::PartitionSumMismatch, "edge " + to_string(e) + " has length " +
                                                      std::to_string(length_) + " but partition sums to " +
                                                      std::to_string(nu_.sum()));
  }
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '(' << e.vector() << ',' << e.partition() << ')';
}

// ---------------------------------------------------------------- LogDatum

LogDatum LogDatum::validate(std::initializer_list<RawEdge> raw) {
  return validate(std::span<const RawEdge>(raw.begin(), raw.size()));
}

LogDatum LogDatum::validate(std::span<const RawEdge> raw) {
  LogDatum s;
  s.edges_.reserve(raw.size());
  LatticeVec sum;
  for (const auto& r : raw) {
    s.edges_.emplace_back(r.e, r.nu);
    sum = sum + r.e;
  }
  std::sort(s.edges_.begin(), s.edges_.end(),
            [](const Edge& a, const Edge& b) { return angle_less(a.direction(), b.direction()); });
  for (std::size_t i = 1; i < s.edges_.size(); ++i) {
    if (s.edges_[i - 1].direction() == s.edges_[i].direction()) {
      throw Error(ErrorKind::DuplicateDirection, "direction " + to_string(s.edges_[i].direction()) + " repeats");
    }
  }
  if (!sum.is_zero()) throw Error(ErrorKind::ClosureViolation, "edge vectors sum to " + to_string(sum));
  return s;
}

std::size_t LogDatum::find_direction(LatticeVec u) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].direction() == u) return i;
  }
  return edges_.size();
}

Int LogDatum::total_length() const {
  Int t = 0;
  for (const auto& e : edges_) t = checked::add(t, e.length());
  return t;
}

std::ostream& operator<<(std::ostream& os, const LogDatum& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
  return os << '}';
}

std::string to_string(const LogDatum& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

Rank rank(const LogDatum& s) {
  if (s.size() < 2) throw Error(ErrorKind::TooFewEdges, "a log datum with " + std::to_string(s.size()) + " edges has no rank");
  return s.size() == 2 ? Rank::One : Rank::Two;
}

bool is_zero_mutable_rank_one(const LogDatum& s) {
  if (s.size() != 2) throw Error(ErrorKind::NotRankOne, "datum has " + std::to_string(s.size()) + " edges");
  return s[0].partition() == s[1].partition();
}

bool is_irreducible(const LogDatum& s) {
  if (s.empty()) return false;
  Int g = 0;
  for (const auto& e : s.edges()) g = gcd(g, e.length());
  if (g != 1) return false;
  // Complementary subsets close up together, so fixing edge 0 outside J
  // halves the enumeration.
  const std::size_t n = s.size();
  if (n > 62) throw Error(ErrorKind::InvalidDatum, "too many edges for subset enumeration");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    LatticeVec sum;
    for (std::size_t i = 1; i < n; ++i) {
      if (mask & (std::uint64_t{1} << (i - 1))) sum = sum + s[i].vector();
    }
    if (sum.is_zero()) return false;
  }
  return true;
}

Int u_height(const LogDatum& s, LatticeVec u) {
  Int h = 0;
  for (const auto& e : s.edges()) h = checked::add(h, pos_part(sform(u, e.vector())));
  return h;
}

std::vector<LatticeVec> polygon(const LogDatum& s) {
  std::vector<LatticeVec> v;
  if (s.empty()) return v;
  v.reserve(s.size());
  LatticeVec p;
  for (std::size_t i = 0; i < s.size(); ++i) {
    v.push_back(p);
    p = p + s[i].vector();
  }
  return v;
}

std::vector<LatticeVec> dual_polygon(const LogDatum& s) {
  std::vector<LatticeVec> v;
  if (s.empty()) return v;
  LatticeVec p;
  for (const auto& e : s.edges()) {
    v.push_back(p);
    p = p + LatticeVec{e.vector().y, checked::neg(e.vector().x)};
  }
  return v;
}

// ---------------------------------------------------------------- named data

LogDatum named(AnDatum an) {
  if (an.n < 0) throw Error(ErrorKind::InvalidDatum, "A_n needs n >= 0");
  Int m = checked::add(an.n, 1);
  return LogDatum::validate({{{1, 0}, {1}}, {{0, m}, Partition::ones(m)}, {{-1, checked::neg(m)}, {1}}});
}

LogDatum named(NamedDatum which) {
  switch (which) {
    case NamedDatum::Tom:
      return LogDatum::validate({{{3, 0}, {2, 1}}, {{0, 2}, {1, 1}}, {{-3, -2}, {1}}});
    case NamedDatum::Jerry:
      return LogDatum::validate({{{3, 0}, {1, 1, 1}}, {{0, 2}, {2}}, {{-3, -2}, {1}}});
  }
  throw Error(ErrorKind::InvalidDatum, "unknown named datum");
}

LogDatum named(std::string_view name) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "tom") return named(NamedDatum::Tom);
  if (lower == "jerry") return named(NamedDatum::Jerry);
  if (lower.size() >= 2 && lower[0] == 'a') {
    std::string_view digits(lower);
    digits.remove_prefix(digits[1] == '_' ? 2 : 1);
    Int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return named(AnDatum{n});
  }
  throw Error(ErrorKind::Parse, "unknown named datum '" + std::string(name) + "' (expected A<n>, tom or jerry)");
}

// ---------------------------------------------------------------- fan

namespace {

Vec3 lift(LatticeVec v) { return {v.x, v.y, 0}; }

void require_rank_two(const LogDatum& s) {
  if (s.size() < 3) throw Error(ErrorKind::NotRankTwo, "datum has " + std::to_string(s.size()) + " edges");
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

FanPresentation fan_presentation(const LogDatum& s) {
  require_rank_two(s);
  FanPresentation fan;
  const Vec3 u{0, 0, 1};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& next = s[(i + 1) % s.size()];
    fan.maximal_cones.push_back({lift(s[i].direction()), lift(next.direction()), u});
    fan.walls.push_back({lift(s[i].direction()), u});
  }
  return fan;
}

ComponentReport component_types(const LogDatum& s) {
  require_rank_two(s);
  ComponentReport report;
  for (std::size_t i = 0; i < s.size(); ++i) {
    LatticeVec a = s[i].direction();
    LatticeVec b = s[(i + 1) % s.size()].direction();
    Int r = sform(a, b);
    LatticeVec nb = apply_map(UnimodularMap::to_first_basis_vector(a), b);
    // nb = (p, r); the shear stabilising (1,0) moves p into [0, r).
    Int q = checked::sub(nb.x, checked::mul(floor_div(nb.x, r), r));
    ComponentType c{r, q, ""};
    c.label = r == 1 ? "smooth" : "1/" + std::to_string(r) + "(1," + std::to_string(q) + ",0)";
    report.components.push_back(std::move(c));
  }
  return report;
}

}  // namespace logmut
