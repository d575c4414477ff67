#pragma once

#include <string_view>
#include <vector>

#include "logmut/logdatum.hpp"

namespace logmut {

/// Addresses part `part` of edge `edge`; both 1-based, edges in the datum's
/// counterclockwise order and parts in the (decreasing) partition order.
struct MutationIndex {
  std::size_t edge = 1;
  std::size_t part = 1;

  friend bool operator==(const MutationIndex&, const MutationIndex&) = default;
};

/// Every (j, k) with h_{u_j}(S) >= l_{j,k}, one entry per distinct part value
/// on each edge. Throws NotRankTwo.
std::vector<MutationIndex> legal_mutations(const LogDatum& s);

enum class MutationBranch {
  Shear,           // (1)  edges off the line Z u_j are sheared
  ShrinkEdge,      // (2a) one part removed from edge j
  RemoveEdge,      // (2b) edge j disappears
  ExtendOpposite,  // (3a) the edge with direction -u_j grows by h - l_{j,k}
  NewOpposite,     // (3b) a new edge -d u_j with partition (d)
};

std::string_view to_string(MutationBranch b);

struct MutationTrace {
  LogDatum result;
  Int height = 0;       // h = h_{u_j}(S)
  Int part_value = 0;   // l_{j,k}
  std::vector<MutationBranch> branches;
};

/// mu_{j,k}(S). Throws NotRankTwo, IllegalMutation (h < l_{j,k}, or an
/// out-of-range index).
LogDatum mutate(const LogDatum& s, MutationIndex m);
MutationTrace mutate_traced(const LogDatum& s, MutationIndex m);

/// Mutation at the first part of edge `edge` equal to `value`.
LogDatum mutate_by_value(const LogDatum& s, std::size_t edge, Int value);

/// Resolves a part value to its first 1-based index on an edge; 0 if absent.
std::size_t part_index_of(const LogDatum& s, std::size_t edge, Int value);

}  // namespace logmut
