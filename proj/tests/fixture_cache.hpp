#ifndef DELPEZZO_TESTS_FIXTURE_CACHE_HPP
#define DELPEZZO_TESTS_FIXTURE_CACHE_HPP

#include <map>
#include <memory>
#include <string>

#include "delpezzo/lines.hpp"
#include "delpezzo/surface_io.hpp"

// Shared fixture surfaces and line configurations so that expensive scans
// (the degree-6 smoothness sweep in particular) run once per test binary.
namespace testutil {

inline delpezzo::cubic::CubicSurface& fixture(const std::string& name) {
  static std::map<std::string, std::unique_ptr<delpezzo::cubic::CubicSurface>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    auto sf = delpezzo::io::parse_surface_json(delpezzo::io::fixture_json(name));
    it = cache.emplace(name, delpezzo::io::make_cubic_ptr(sf)).first;
  }
  return *it->second;
}

inline const delpezzo::lines::LineConfiguration& fixture_lines(const std::string& name) {
  static std::map<std::string, std::unique_ptr<delpezzo::lines::LineConfiguration>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    it = cache.emplace(name, std::make_unique<delpezzo::lines::LineConfiguration>(
                                 delpezzo::lines::find_lines(fixture(name))))
             .first;
  }
  return *it->second;
}

}  // namespace testutil

#endif  // DELPEZZO_TESTS_FIXTURE_CACHE_HPP
