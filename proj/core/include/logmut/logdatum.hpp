#pragma once

#include <array>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "logmut/lattice.hpp"

namespace logmut {

/// Weakly decreasing positive parts. Zero parts are dropped and the rest are
/// sorted on construction, so two partitions compare equal exactly when they
/// agree as multisets.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<Int> parts);
  /// Throws ErrorKind::InvalidPartition on a negative part.
  explicit Partition(std::vector<Int> parts);

  /// (1^n)
  static Partition ones(Int n);

  const std::vector<Int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Int operator[](std::size_t i) const { return parts_[i]; }
  Int sum() const;

  Partition without_one(Int value) const;
  Partition with(Int value) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of n, largest parts first: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(Int n);

/// One pair (e_i, nu_i) of a log datum, with e_i = length * direction.
class Edge {
 public:
  /// Throws ZeroVector or PartitionSumMismatch.
  Edge(LatticeVec e, Partition nu);

  LatticeVec vector() const { return e_; }
  const Partition& partition() const { return nu_; }
  LatticeVec direction() const { return u_; }
  Int length() const { return length_; }

  friend bool operator==(const Edge& a, const Edge& b) { return a.e_ == b.e_ && a.nu_ == b.nu_; }

 private:
  LatticeVec e_;
  Partition nu_;
  LatticeVec u_;
  Int length_;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

struct RawEdge {
  LatticeVec e;
  Partition nu;
};

enum class Rank { One, Two };

/// Edges of a log datum in counterclockwise order of their directions,
/// starting from the direction of smallest angle to (1, 0).
class LogDatum {
 public:
  /// The empty datum.
  LogDatum() = default;

  /// Checks closure, distinct directions and partition sums, and sorts.
  static LogDatum validate(std::span<const RawEdge> raw);
  static LogDatum validate(std::initializer_list<RawEdge> raw);

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const Edge& operator[](std::size_t i) const { return edges_[i]; }

  /// Index of the edge with direction u, or size() if absent.
  std::size_t find_direction(LatticeVec u) const;

  /// Length sum over all edges.
  Int total_length() const;

  friend bool operator==(const LogDatum&, const LogDatum&) = default;

 private:
  std::vector<Edge> edges_;
};

std::ostream& operator<<(std::ostream& os, const LogDatum& s);
std::string to_string(const LogDatum& s);

/// Throws TooFewEdges for fewer than two edges.
Rank rank(const LogDatum& s);

/// Equal partitions on the two edges. Throws NotRankOne.
bool is_zero_mutable_rank_one(const LogDatum& s);

/// gcd of the lengths is 1 and no nonempty proper subset of edges closes up.
bool is_irreducible(const LogDatum& s);

/// h_u(S) = sum of {u, e_i}_+.
Int u_height(const LogDatum& s, LatticeVec u);

/// Vertices of the polygon with edge vectors e_i, starting at the origin.
std::vector<LatticeVec> polygon(const LogDatum& s);

/// Vertices of the polygon whose edges are the e_i turned clockwise by 90
/// degrees: each edge has inner normal u_i and lattice length l_i.
std::vector<LatticeVec> dual_polygon(const LogDatum& s);

struct AnDatum { Int n; };
enum class NamedDatum { Tom, Jerry };

LogDatum named(AnDatum an);
LogDatum named(NamedDatum which);

/// Parses "A<n>", "tom" or "jerry" (case-insensitive). Throws Parse.
LogDatum named(std::string_view name);

using Vec3 = std::array<Int, 3>;

struct MaximalCone {
  Vec3 first;   // (u_i, 0)
  Vec3 second;  // (u_{i+1}, 0)
  Vec3 joint;   // u = (0, 0, 1)
};

struct Wall {
  Vec3 ray;    // (u_i, 0)
  Vec3 joint;  // u
};

/// The fan in M = L + Z with cones <u_i, u_{i+1}, u>.
struct FanPresentation {
  std::vector<MaximalCone> maximal_cones;
  std::vector<Wall> walls;
  Vec3 joint{0, 0, 1};
};

/// Throws NotRankTwo.
FanPresentation fan_presentation(const LogDatum& s);

struct ComponentType {
  Int index;          // {u_i, u_{i+1}}
  Int q;              // 0 <= q < index
  std::string label;  // "smooth" or "1/r(1,q,0)"
};

struct ComponentReport {
  std::vector<ComponentType> components;
};

/// Singularity type of each component Spec k[sigma_i cap M]. The 2-d cone
/// <u_i, u_{i+1}> is brought to <(1,0), (q,r)> with 0 <= q < r; its dual
/// cone is <(0,1), (r,-q)>, the cone of 1/r(1,q).
ComponentReport component_types(const LogDatum& s);

}  // namespace logmut
