#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "logmut/logdatum.hpp"
#include "logmut/mutation.hpp"

namespace logmut {

/// Distinguished representative of a datum modulo orientation-preserving
/// lattice automorphisms and cyclic relabelling.
struct CanonicalForm {
  std::vector<Int> key;      // edge list of `representative`, flattened
  LogDatum representative;   // first edge has direction (1,0)

  std::string to_string() const;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.key == b.key; }
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) { return a.key <=> b.key; }
};

/// For every edge i: send u_i to (1,0) and shear so the next direction (p,q)
/// satisfies 0 <= p < q. The key is the lexicographic minimum over i.
CanonicalForm canonicalize(const LogDatum& s);

/// S transported by an automorphism of L.
LogDatum transform(const LogDatum& s, const UnimodularMap& m);

/// A step addresses edges by 1-based position in the counterclockwise order
/// of the intermediate datum and parts by value, so replay does not depend on
/// how equal parts are indexed.
struct CertificateStep {
  std::size_t edge = 1;
  Int part = 1;

  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

struct Certificate {
  std::vector<CertificateStep> steps;
  LogDatum terminal;
};

struct SearchLimits {
  std::size_t max_depth = 32;
  std::size_t max_states = 1'000'000;
  unsigned threads = 1;
};

struct VerdictYes {
  Certificate certificate;
};
struct VerdictNo {
  std::size_t explored = 0;
};
struct VerdictUnknown {
  std::size_t explored = 0;
  std::size_t depth_bound = 0;
  bool state_limit_hit = false;
  std::size_t overflow_pruned = 0;  // successors dropped for leaving the Int range
};

using Verdict = std::variant<VerdictYes, VerdictNo, VerdictUnknown>;

std::string verdict_name(const Verdict& v);
inline bool is_yes(const Verdict& v) { return std::holds_alternative<VerdictYes>(v); }
inline bool is_no(const Verdict& v) { return std::holds_alternative<VerdictNo>(v); }

/// Breadth-first search over canonical classes. Success is a rank-one datum
/// with equal partitions; rank-one data with unequal partitions are dead
/// ends. The certificate is a shortest path in the explored graph; among
/// terminals at that depth one already in canonical form is preferred.
/// Successors that overflow Int are dropped, and a search that dropped any
/// reports Unknown instead of No. With threads > 1 each level is expanded
/// concurrently; verdicts and certificates do not depend on the thread count.
Verdict is_zero_mutable(const LogDatum& s, const SearchLimits& limits = {});

/// Folds the steps over S. Throws IllegalMutation naming the failing step.
LogDatum replay(const LogDatum& s, const Certificate& c);

/// replay(s, c) == c.terminal and the terminal is zero-mutable rank one.
bool verify_certificate(const LogDatum& s, const Certificate& c);

struct EnumerationRow {
  std::vector<Partition> assignment;  // one partition per input edge, input order
  LogDatum datum;
  Verdict verdict;
};

/// Runs the decider on every choice of partitions nu_i of the lengths l_i.
/// Rows come in lexicographic order of the assignment, larger partitions
/// first. Throws ClosureViolation / DuplicateDirection / ZeroVector.
std::vector<EnumerationRow> enumerate_zero_mutable(const std::vector<LatticeVec>& edge_vectors,
                                                   const SearchLimits& limits = {});

}  // namespace logmut
