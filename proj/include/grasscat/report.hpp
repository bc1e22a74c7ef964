#pragma once

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace grasscat {

struct CheckItem {
  std::string axiom;
  std::size_t samples = 0;
  double max_residual = 0.0;
  bool pass = true;
  std::string witness;  // worst failing instance, empty when passing
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<CheckItem> items;

  bool passed() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  double max_residual() const {
    double r = 0.0;
    for (const auto& it : items) r = std::max(r, it.max_residual);
    return r;
  }
};

inline std::string render_text(const Report& rep) {
  std::ostringstream os;
  os << "suite: " << rep.suite << "  seed: " << rep.seed
     << "  tolerance: " << rep.tolerance << "\n";
  for (const auto& it : rep.items) {
    os << "  [" << (it.pass ? "pass" : "FAIL") << "] " << it.axiom
       << "  residual=" << std::scientific << std::setprecision(3) << it.max_residual
       << std::defaultfloat << "  samples=" << it.samples << "\n";
    if (!it.pass && !it.witness.empty()) os << "    witness: " << it.witness << "\n";
  }
  os << (rep.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace grasscat
