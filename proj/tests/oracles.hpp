#pragma once

// Reference implementations used to cross-check the library. They work on
// plain edge lists and only share the value types with the code under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "logmut/decider.hpp"
#include "logmut/logdatum.hpp"
#include "logmut/wallfn.hpp"

namespace oracle {

using logmut::Int;
using logmut::LatticeVec;

struct Raw {
  LatticeVec e;
  std::vector<Int> parts;  // any order
};
using RawDatum = std::vector<Raw>;

inline Int igcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int cross(LatticeVec a, LatticeVec b) { return a.x * b.y - a.y * b.x; }

inline RawDatum raw_of(const logmut::LogDatum& s) {
  RawDatum r;
  for (const auto& e : s.edges()) r.push_back({e.vector(), e.partition().parts()});
  return r;
}

inline logmut::LogDatum datum_of(const RawDatum& r) {
  std::vector<logmut::RawEdge> raw;
  for (const auto& e : r) raw.push_back({e.e, logmut::Partition(e.parts)});
  return logmut::LogDatum::validate(raw);
}

// Irreducible: gcd of lengths is 1 and no proper nonempty subset sums to 0.
inline bool irreducible(const RawDatum& s) {
  Int g = 0;
  for (const auto& e : s) g = igcd(g, igcd(e.e.x, e.e.y));
  if (g != 1) return false;
  const std::size_t n = s.size();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    Int x = 0, y = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        x += s[i].e.x;
        y += s[i].e.y;
      }
    }
    if (x == 0 && y == 0) return false;
  }
  return true;
}

inline Int height(const RawDatum& s, LatticeVec u) {
  Int h = 0;
  for (const auto& e : s) h += std::max<Int>(0, cross(u, e.e));
  return h;
}

// One mutation straight from the definition. `j` indexes `s` as given.
// Returns nullopt if h < value.
inline std::optional<RawDatum> mutate(const RawDatum& s, std::size_t j, Int value) {
  const Int len = igcd(s[j].e.x, s[j].e.y);
  const LatticeVec u{s[j].e.x / len, s[j].e.y / len};
  const Int h = height(s, u);
  if (h < value) return std::nullopt;
  RawDatum out;
  std::optional<std::size_t> opposite;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == j) continue;
    const Int c = cross(u, s[i].e);
    if (c == 0) {
      opposite = i;
      continue;
    }
    Int t = std::max<Int>(0, c);
    out.push_back({{s[i].e.x + t * u.x, s[i].e.y + t * u.y}, s[i].parts});
  }
  std::vector<Int> rest = s[j].parts;
  rest.erase(std::find(rest.begin(), rest.end(), value));
  if (!rest.empty()) out.push_back({{(len - value) * u.x, (len - value) * u.y}, rest});
  const Int d = h - value;
  if (opposite) {
    Raw o = s[*opposite];
    o.e = {o.e.x - d * u.x, o.e.y - d * u.y};
    if (d > 0) o.parts.push_back(d);
    out.push_back(o);
  } else if (d > 0) {
    out.push_back({{-d * u.x, -d * u.y}, {d}});
  }
  return out;
}

inline bool zero_mutable_rank_one(const RawDatum& s) {
  auto a = s[0].parts, b = s[1].parts;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline bool too_big(const RawDatum& s, Int bound) {
  return std::any_of(s.begin(), s.end(), [&](const Raw& e) {
    return e.e.x > bound || e.e.x < -bound || e.e.y > bound || e.e.y < -bound;
  });
}

// Counterclockwise from (1,0), by half plane and cross product.
inline RawDatum sorted(RawDatum s) {
  auto upper = [](LatticeVec v) { return v.y > 0 || (v.y == 0 && v.x > 0); };
  std::sort(s.begin(), s.end(), [&](const Raw& a, const Raw& b) {
    if (upper(a.e) != upper(b.e)) return upper(a.e);
    return cross(a.e, b.e) > 0;
  });
  for (auto& e : s) std::sort(e.parts.rbegin(), e.parts.rend());
  return s;
}

// Is there an integer matrix of determinant 1 carrying a onto b, edge by
// edge with partitions? Solves for the matrix from two consecutive edges.
inline bool equivalent(const RawDatum& a_in, const RawDatum& b_in) {
  if (a_in.size() != b_in.size()) return false;
  const RawDatum a = sorted(a_in), b = sorted(b_in);
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (n == 2) {
      // Any two rank-one data with the same lengths differ by a lattice map.
      if (a[0].parts == b[k].parts && a[1].parts == b[(k + 1) % 2].parts) return true;
      continue;
    }
    const LatticeVec a0 = a[0].e, a1 = a[1].e, b0 = b[k].e, b1 = b[(k + 1) % n].e;
    const Int det = cross(a0, a1);
    if (det == 0 || cross(b0, b1) != det) continue;
    // M = [b0 b1] [a0 a1]^{-1}
    const Int m00 = b0.x * a1.y - b1.x * a0.y, m01 = -b0.x * a1.x + b1.x * a0.x;
    const Int m10 = b0.y * a1.y - b1.y * a0.y, m11 = -b0.y * a1.x + b1.y * a0.x;
    if (m00 % det || m01 % det || m10 % det || m11 % det) continue;
    const Int p = m00 / det, q = m01 / det, r = m10 / det, t = m11 / det;
    if (p * t - q * r != 1) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const Raw& x = a[i];
      const Raw& y = b[(k + i) % n];
      ok = x.parts == y.parts && LatticeVec{p * x.e.x + q * x.e.y, r * x.e.x + t * x.e.y} == y.e;
    }
    if (ok) return true;
  }
  return false;
}

enum class Answer { Yes, No, Open };

// Depth-limited DFS with no memo table. A branch that returns to a datum
// equivalent to one on the current path is closed. Open means some branch
// was cut by the depth bound or grew past `coord_bound`.
inline Answer dfs(const RawDatum& s, std::size_t depth, Int coord_bound, std::vector<RawDatum>& path) {
  if (s.size() == 2) return zero_mutable_rank_one(s) ? Answer::Yes : Answer::No;
  if (too_big(s, coord_bound)) return Answer::Open;
  for (const auto& p : path) {
    if (equivalent(p, s)) return Answer::No;
  }
  path.push_back(s);
  bool open = false;
  for (std::size_t j = 0; j < s.size(); ++j) {
    std::vector<Int> values = s[j].parts;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (Int v : values) {
      auto next = mutate(s, j, v);
      if (!next) continue;
      if (depth == 0) {
        open = true;
        continue;
      }
      Answer a = dfs(*next, depth - 1, coord_bound, path);
      if (a == Answer::Yes) {
        path.pop_back();
        return Answer::Yes;
      }
      if (a == Answer::Open) open = true;
    }
  }
  path.pop_back();
  return open ? Answer::Open : Answer::No;
}

// Iterative deepening up to max_depth mutations.
inline Answer iddfs(const RawDatum& s, std::size_t max_depth, Int coord_bound = Int{1} << 28) {
  Answer last = Answer::Open;
  std::vector<RawDatum> path;
  for (std::size_t d = 0; d <= max_depth; ++d) {
    last = dfs(s, d, coord_bound, path);
    if (last != Answer::Open) return last;
  }
  return last;
}

// Every valid datum whose edge vectors have |coords| <= bound and total
// length <= max_length, in counterclockwise order, with every partition
// assignment.
inline void for_each_small_datum(Int bound, Int max_length, const std::function<void(const logmut::LogDatum&)>& f) {
  std::vector<LatticeVec> vecs;
  for (Int x = -bound; x <= bound; ++x)
    for (Int y = -bound; y <= bound; ++y)
      if (x != 0 || y != 0) vecs.push_back({x, y});
  std::sort(vecs.begin(), vecs.end(), logmut::angle_less);
  auto same_direction = [](LatticeVec a, LatticeVec b) { return cross(a, b) == 0 && a.x * b.x + a.y * b.y > 0; };

  std::vector<LatticeVec> pick;
  auto emit = [&](LatticeVec last) {
    std::vector<LatticeVec> es = pick;
    es.push_back(last);
    std::vector<std::vector<logmut::Partition>> choices;
    for (auto v : es) choices.push_back(logmut::partitions_of(igcd(v.x, v.y)));
    std::vector<std::size_t> idx(es.size(), 0);
    while (true) {
      std::vector<logmut::RawEdge> raw;
      for (std::size_t k = 0; k < es.size(); ++k) raw.push_back({es[k], choices[k][idx[k]]});
      f(logmut::LogDatum::validate(raw));
      std::size_t k = es.size();
      while (k > 0 && ++idx[k - 1] == choices[k - 1].size()) idx[--k] = 0;
      if (k == 0) break;
    }
  };
  // Vectors are picked in increasing angle; the last one is forced by closure.
  std::function<void(std::size_t, Int, Int, Int)> rec = [&](std::size_t from, Int sx, Int sy, Int used) {
    if (!pick.empty()) {
      const LatticeVec c{-sx, -sy};
      if (!c.is_zero() && c.x >= -bound && c.x <= bound && c.y >= -bound && c.y <= bound &&
          logmut::angle_less(pick.back(), c) && used + igcd(c.x, c.y) <= max_length &&
          std::none_of(pick.begin(), pick.end(), [&](LatticeVec p) { return same_direction(p, c); }))
        emit(c);
    }
    for (std::size_t i = from; i < vecs.size(); ++i) {
      const Int len = igcd(vecs[i].x, vecs[i].y);
      if (used + len + 1 > max_length) continue;
      if (std::any_of(pick.begin(), pick.end(), [&](LatticeVec p) { return same_direction(p, vecs[i]); })) continue;
      pick.push_back(vecs[i]);
      rec(i + 1, sx + vecs[i].x, sy + vecs[i].y, used + len);
      pick.pop_back();
    }
  };
  rec(0, 0, 0, 0);
}

// Random valid datum with |coords| <= bound, 3..max_edges edges and total
// length <= max_length.
inline logmut::LogDatum random_datum(std::mt19937_64& rng, Int bound, Int max_length, std::size_t max_edges = 6) {
  std::uniform_int_distribution<Int> coord(-bound, bound);
  std::uniform_int_distribution<std::size_t> count(3, max_edges);
  while (true) {
    const std::size_t n = count(rng);
    std::vector<LatticeVec> es;
    Int sx = 0, sy = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      LatticeVec v{coord(rng), coord(rng)};
      if (v.is_zero()) break;
      es.push_back(v);
      sx += v.x;
      sy += v.y;
    }
    if (es.size() + 1 != n) continue;
    es.push_back({-sx, -sy});
    if (es.back().is_zero() || too_big({{es.back(), {}}}, bound)) continue;
    Int total = 0;
    bool dup = false;
    for (std::size_t i = 0; i < es.size(); ++i) {
      total += igcd(es[i].x, es[i].y);
      for (std::size_t k = 0; k < i; ++k) {
        if (cross(es[i], es[k]) == 0 && es[i].x * es[k].x + es[i].y * es[k].y > 0) dup = true;
      }
    }
    if (dup || total > max_length) continue;
    std::vector<logmut::RawEdge> raw;
    for (auto v : es) {
      auto options = logmut::partitions_of(igcd(v.x, v.y));
      std::uniform_int_distribution<std::size_t> pickp(0, options.size() - 1);
      raw.push_back({v, options[pickp(rng)]});
    }
    return logmut::LogDatum::validate(raw);
  }
}

inline logmut::UnimodularMap random_sl2(std::mt19937_64& rng, Int bound = 5) {
  std::uniform_int_distribution<Int> entry(-bound, bound);
  while (true) {
    Int a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
    if (a * d - b * c == 1) return {a, b, c, d};
  }
}

// Samples rational points of f = 0 near small parameters and checks that
// f_x and f_u never both vanish there. Only a necessary condition for
// smoothness; used against the exact test on curves with a known answer.
inline bool singular_point_found(const logmut::BiPoly& f, int grid = 6) {
  const auto fx = f.d_dx(), fu = f.d_du();
  for (int p = -grid; p <= grid; ++p)
    for (int q = 1; q <= grid; ++q)
      for (int r = -grid; r <= grid; ++r)
        for (int t = 1; t <= grid; ++t) {
          logmut::Rational x(p, q), u(r, t);
          x.canonicalize();
          u.canonicalize();
          if (f.eval(x, u) == 0 && fx.eval(x, u) == 0 && fu.eval(x, u) == 0) return true;
        }
  return false;
}

}  // namespace oracle
