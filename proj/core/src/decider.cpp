#include "logmut/decider.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace logmut {

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct KeyHash {
  std::size_t operator()(const std::vector<Int>& key) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Int v : key) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::string CanonicalForm::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < key.size(); ++i) os << (i ? " " : "") << key[i];
  return os.str();
}

LogDatum transform(const LogDatum& s, const UnimodularMap& m) {
  std::vector<RawEdge> raw;
  raw.reserve(s.size());
  for (const auto& e : s.edges()) raw.push_back({apply_map(m, e.vector()), e.partition()});
  return LogDatum::validate(raw);
}

namespace {

// Orientation-preserving maps keep the cyclic order, so the image starting at
// edge i is already sorted once u_i goes to (1,0).
std::vector<Int> canonical_key(const LogDatum& s, UnimodularMap* best_map) {
  std::vector<Int> best, key;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    UnimodularMap m = UnimodularMap::to_first_basis_vector(s[i].direction());
    LatticeVec next = apply_map(m, s[(i + 1) % n].direction());
    // In rank one the next direction is (-1,0) and every shear fixes the datum.
    if (next.y > 0) m = UnimodularMap::shear(checked::neg(floor_div(next.x, next.y))) * m;
    key.clear();
    for (std::size_t k = 0; k < n; ++k) {
      const Edge& e = s[(i + k) % n];
      LatticeVec v = apply_map(m, e.vector());
      key.push_back(v.x);
      key.push_back(v.y);
      key.push_back(static_cast<Int>(e.partition().size()));
      for (Int p : e.partition().parts()) key.push_back(p);
    }
    if (i == 0 || key < best) {
      best.swap(key);
      if (best_map) *best_map = m;
    }
  }
  return best;
}

}  // namespace

CanonicalForm canonicalize(const LogDatum& s) {
  CanonicalForm out;
  UnimodularMap m;
  out.key = canonical_key(s, &m);
  out.representative = transform(s, m);
  return out;
}

std::string verdict_name(const Verdict& v) {
  if (std::holds_alternative<VerdictYes>(v)) return "Yes";
  if (std::holds_alternative<VerdictNo>(v)) return "No";
  return "Unknown";
}

namespace {

struct Node {
  LogDatum datum;
  std::size_t parent;
  CertificateStep step;
};

struct Child {
  LogDatum datum;
  std::vector<Int> key;
  CertificateStep step;
};

struct Expansion {
  std::vector<Child> children;
  std::size_t overflowed = 0;
};

Expansion expand(const LogDatum& s) {
  Expansion out;
  for (const auto& m : legal_mutations(s)) {
    try {
      LogDatum next = mutate(s, m);
      std::vector<Int> key = canonical_key(next, nullptr);
      out.children.push_back({std::move(next), std::move(key), {m.edge, s[m.edge - 1].partition()[m.part - 1]}});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Overflow) throw;
      ++out.overflowed;
    }
  }
  return out;
}

std::vector<Expansion> expand_level(const std::vector<Node>& nodes, const std::vector<std::size_t>& frontier,
                                    unsigned threads) {
  std::vector<Expansion> children(frontier.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, frontier.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < frontier.size(); ++i) children[i] = expand(nodes[frontier[i]].datum);
    return children;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < frontier.size(); i += workers) children[i] = expand(nodes[frontier[i]].datum);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return children;
}

Certificate build_certificate(const std::vector<Node>& nodes, std::size_t leaf) {
  Certificate c;
  c.terminal = nodes[leaf].datum;
  for (std::size_t i = leaf; i != 0; i = nodes[i].parent) c.steps.push_back(nodes[i].step);
  std::reverse(c.steps.begin(), c.steps.end());
  return c;
}

}  // namespace

Verdict is_zero_mutable(const LogDatum& s, const SearchLimits& limits) {
  if (s.size() < 2) throw Error(ErrorKind::InvalidDatum, "zero-mutability needs at least two edges");
  if (s.size() == 2) {
    if (is_zero_mutable_rank_one(s)) return VerdictYes{{{}, s}};
    return VerdictNo{1};
  }

  std::vector<Node> nodes;
  std::unordered_set<std::vector<Int>, KeyHash> visited;
  nodes.push_back({s, 0, {}});
  visited.insert(canonical_key(s, nullptr));

  std::size_t pruned = 0;
  auto no_or_unknown = [&](std::size_t depth_bound) -> Verdict {
    if (pruned > 0) return VerdictUnknown{visited.size(), depth_bound, false, pruned};
    return VerdictNo{visited.size()};
  };

  std::vector<std::size_t> frontier{0};
  for (std::size_t depth = 0; !frontier.empty(); ++depth) {
    if (depth == limits.max_depth) {
      bool open = std::any_of(frontier.begin(), frontier.end(),
                              [&](std::size_t i) { return !legal_mutations(nodes[i].datum).empty(); });
      if (open) return VerdictUnknown{visited.size(), limits.max_depth, false, pruned};
      return no_or_unknown(limits.max_depth);
    }
    auto children = expand_level(nodes, frontier, limits.threads);
    std::vector<std::size_t> next;
    std::optional<std::size_t> found;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      pruned += children[f].overflowed;
      for (auto& child : children[f].children) {
        if (child.datum.size() == 2) {
          if (!is_zero_mutable_rank_one(child.datum)) continue;
          // Among the shortest certificates prefer a terminal already in normal form.
          const bool normal = child.datum == canonicalize(child.datum).representative;
          if (found && !normal) continue;
          nodes.push_back({std::move(child.datum), frontier[f], child.step});
          found = nodes.size() - 1;
          if (normal) return VerdictYes{build_certificate(nodes, *found)};
          continue;
        }
        if (found || visited.contains(child.key)) continue;
        if (visited.size() >= limits.max_states) return VerdictUnknown{visited.size(), depth + 1, true, pruned};
        visited.insert(std::move(child.key));
        nodes.push_back({std::move(child.datum), frontier[f], child.step});
        next.push_back(nodes.size() - 1);
      }
    }
    if (found) return VerdictYes{build_certificate(nodes, *found)};
    frontier = std::move(next);
    if (frontier.empty()) return no_or_unknown(depth + 1);
  }
  return VerdictNo{visited.size()};
}

LogDatum replay(const LogDatum& s, const Certificate& c) {
  LogDatum current = s;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& step = c.steps[i];
    std::size_t k = part_index_of(current, step.edge, step.part);
    if (k == 0) {
      throw Error(ErrorKind::IllegalMutation, "step " + std::to_string(i + 1) + ": edge " + std::to_string(step.edge) +
                                                  " has no part " + std::to_string(step.part));
    }
    try {
      current = mutate(current, {step.edge, k});
    } catch (const Error& e) {
      throw Error(e.kind(), "step " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return current;
}

bool verify_certificate(const LogDatum& s, const Certificate& c) {
  try {
    LogDatum end = replay(s, c);
    return end == c.terminal && end.size() == 2 && is_zero_mutable_rank_one(end);
  } catch (const Error&) {
    return false;
  }
}

std::vector<EnumerationRow> enumerate_zero_mutable(const std::vector<LatticeVec>& edge_vectors,
                                                   const SearchLimits& limits) {
  std::vector<RawEdge> probe;
  std::vector<std::vector<Partition>> choices;
  for (auto e : edge_vectors) {
    Int len = primitive_split(e).length;
    probe.push_back({e, Partition::ones(len)});
    choices.push_back(partitions_of(len));
  }
  LogDatum::validate(probe);

  std::vector<EnumerationRow> rows;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<RawEdge> raw;
    std::vector<Partition> assignment;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      assignment.push_back(choices[i][pick[i]]);
      raw.push_back({edge_vectors[i], choices[i][pick[i]]});
    }
    LogDatum datum = LogDatum::validate(raw);
    Verdict v = is_zero_mutable(datum, limits);
    rows.push_back({std::move(assignment), std::move(datum), std::move(v)});

    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return rows;
    }
    if (choices.empty()) return rows;
  }
}

}  // namespace logmut
