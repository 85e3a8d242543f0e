#pragma once

// Resolution fixtures from data/resolutions, plus concrete instances of the
// symbolic ones (free unknowns set to small values keeping every multiplicity
// a nonnegative integer).

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "acmgate/gorenstein_km.hpp"
#include "acmgate/io.hpp"
#include "oracles.hpp"

namespace fixtures {

struct Fixture {
  std::string name;
  acm::ResolutionFile file;
};

inline std::string data_dir() { return std::string(ACMGATE_SOURCE_DIR) + "/data"; }

inline std::vector<Fixture> resolutions() {
  std::vector<Fixture> out;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir() + "/resolutions")) {
    if (entry.path().extension() != ".json") continue;
    std::string name = entry.path().stem().string();
    if (name == "empty_pairs") continue;
    out.push_back({name, acm::parse_resolution(acm::read_text_file(entry.path().string()))});
  }
  std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
  return out;
}

struct Concrete {
  std::string name;
  acm::GorensteinResolution res;
  std::int64_t d;
  std::int64_t g;
  int e;
};

inline std::int64_t as_int(const acm::Poly& p) { return p.constant_value()->to_int64(); }

inline std::vector<Concrete> concrete_instances() {
  std::vector<Concrete> out;
  for (const auto& fx : resolutions()) {
    auto res = fx.file.resolution();
    auto inv = *fx.file.curve();
    auto solved = acm::hilbert_constraints(res, inv, {}, fx.file.constraint_polys());
    res = res.apply(solved);
    inv.d = acm::apply(solved, inv.d);
    inv.g = acm::apply(solved, inv.g);
    std::set<std::string> free = res.unknowns();
    free.merge(inv.d.unknowns());
    std::vector<std::string> names(free.begin(), free.end());
    // Small grid; d (when free) ranges over plausible degrees.
    std::vector<std::int64_t> digits(names.size(), 0);
    auto lo = [&](std::size_t i) { return names[i] == "d" ? 20 : 0; };
    auto hi = [&](std::size_t i) { return names[i] == "d" ? 30 : 3; };
    for (std::size_t i = 0; i < names.size(); ++i) digits[i] = lo(i);
    int kept = 0;
    for (;;) {
      acm::Assignment values;
      for (std::size_t i = 0; i < names.size(); ++i) values[names[i]] = acm::Rational(digits[i]);
      auto r = res.partial_eval(values);
      bool ok = true;
      for (const auto& p : r.pairs()) {
        auto m = p.mult.constant_value();
        if (!m || !m->is_integer() || m->sign() < 0) ok = false;
      }
      if (ok && kept < 6) {
        out.push_back({fx.name, r, as_int(inv.d.partial_eval(values)), as_int(inv.g.partial_eval(values)), inv.e});
        ++kept;
      }
      std::size_t i = 0;
      while (i < names.size() && digits[i] == hi(i)) digits[i] = lo(i), ++i;
      if (i == names.size()) break;
      ++digits[i];
    }
  }
  return out;
}

inline oracle::Betti to_betti(const Concrete& c) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : c.res.pairs()) pairs.push_back({p.twist, static_cast<int>(as_int(p.mult))});
  return oracle::expand(c.e, pairs);
}

}  // namespace fixtures
