#include "logmut/mutation.hpp"

#include <algorithm>

namespace logmut {

namespace {

void require_rank_two(const LogDatum& s) {
  if (s.size() < 3) throw Error(ErrorKind::NotRankTwo, "mutation needs a rank-two datum, got " + std::to_string(s.size()) + " edges");
}

}  // namespace

std::string_view to_string(MutationBranch b) {
  switch (b) {
    case MutationBranch::Shear: return "(1)";
    case MutationBranch::ShrinkEdge: return "(2a)";
    case MutationBranch::RemoveEdge: return "(2b)";
    case MutationBranch::ExtendOpposite: return "(3a)";
    case MutationBranch::NewOpposite: return "(3b)";
  }
  return "?";
}

std::vector<MutationIndex> legal_mutations(const LogDatum& s) {
  require_rank_two(s);
  std::vector<MutationIndex> out;
  for (std::size_t j = 0; j < s.size(); ++j) {
    Int h = u_height(s, s[j].direction());
    const auto& parts = s[j].partition().parts();
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k > 0 && parts[k] == parts[k - 1]) continue;
      if (h >= parts[k]) out.push_back({j + 1, k + 1});
    }
  }
  return out;
}

MutationTrace mutate_traced(const LogDatum& s, MutationIndex m) {
  require_rank_two(s);
  if (m.edge < 1 || m.edge > s.size()) {
    throw Error(ErrorKind::IllegalMutation, "edge " + std::to_string(m.edge) + " out of range 1.." + std::to_string(s.size()));
  }
  const std::size_t j = m.edge - 1;
  const Edge& ej = s[j];
  if (m.part < 1 || m.part > ej.partition().size()) {
    throw Error(ErrorKind::IllegalMutation, "part " + std::to_string(m.part) + " out of range for partition of edge " +
                                                std::to_string(m.edge));
  }
  const LatticeVec u = ej.direction();
  const Int h = u_height(s, u);
  const Int ljk = ej.partition()[m.part - 1];
  if (h < ljk) {
    throw Error(ErrorKind::IllegalMutation, "h = " + std::to_string(h) + " < l_{j,k} = " + std::to_string(ljk) +
                                                " at edge " + std::to_string(m.edge) + ", part " + std::to_string(m.part));
  }
  const Int d = checked::sub(h, ljk);
  const std::size_t opposite = s.find_direction(-u);

  MutationTrace trace;
  trace.height = h;
  trace.part_value = ljk;
  std::vector<RawEdge> out;
  out.reserve(s.size() + 1);

  bool sheared = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == j || i == opposite) continue;
    out.push_back({shear_positive(u, s[i].vector()), s[i].partition()});
    sheared = true;
  }
  if (sheared) trace.branches.push_back(MutationBranch::Shear);

  if (ej.partition().size() > 1) {
    out.push_back({checked::sub(ej.length(), ljk) * u, ej.partition().without_one(ljk)});
    trace.branches.push_back(MutationBranch::ShrinkEdge);
  } else {
    trace.branches.push_back(MutationBranch::RemoveEdge);
  }

  if (opposite < s.size()) {
    const Edge& eo = s[opposite];
    out.push_back({eo.vector() + d * eo.direction(), eo.partition().with(d)});
    trace.branches.push_back(MutationBranch::ExtendOpposite);
  } else if (d > 0) {
    out.push_back({checked::neg(d) * u, Partition{d}});
    trace.branches.push_back(MutationBranch::NewOpposite);
  }

  trace.result = LogDatum::validate(out);
  return trace;
}

LogDatum mutate(const LogDatum& s, MutationIndex m) { return mutate_traced(s, m).result; }

std::size_t part_index_of(const LogDatum& s, std::size_t edge, Int value) {
  if (edge < 1 || edge > s.size()) return 0;
  const auto& parts = s[edge - 1].partition().parts();
  auto it = std::find(parts.begin(), parts.end(), value);
  return it == parts.end() ? 0 : static_cast<std::size_t>(it - parts.begin()) + 1;
}

LogDatum mutate_by_value(const LogDatum& s, std::size_t edge, Int value) {
  std::size_t k = part_index_of(s, edge, value);
  if (k == 0) {
    throw Error(ErrorKind::IllegalMutation, "edge " + std::to_string(edge) + " has no part equal to " + std::to_string(value));
  }
  return mutate(s, {edge, k});
}

}  // namespace logmut
