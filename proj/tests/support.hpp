#pragma once

#include <optional>
#include <string>

#include "logmut/error.hpp"
#include "logmut/logdatum.hpp"

#ifndef LOGMUT_FIXTURE_DIR
#define LOGMUT_FIXTURE_DIR "tests/fixtures"
#endif

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(LOGMUT_FIXTURE_DIR) + "/" + name; }

// Kind of the logmut::Error thrown by f, or nullopt if nothing was thrown.
template <class F>
std::optional<logmut::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const logmut::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline logmut::LogDatum quad() {
  return logmut::LogDatum::validate({{{2, 1}, {1}}, {{-3, 2}, {1}}, {{-2, 0}, {2}}, {{3, -3}, {1, 2}}});
}

inline logmut::LogDatum quad_mutated() {
  return logmut::LogDatum::validate({{{1, 0}, {1}}, {{2, 1}, {1}}, {{-3, 2}, {1}}, {{0, -3}, {1, 2}}});
}

inline logmut::LogDatum tom() { return logmut::named(logmut::NamedDatum::Tom); }
inline logmut::LogDatum jerry() { return logmut::named(logmut::NamedDatum::Jerry); }
inline logmut::LogDatum an(logmut::Int n) { return logmut::named(logmut::AnDatum{n}); }

}  // namespace testing
