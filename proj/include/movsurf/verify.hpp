#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "movsurf/movmat.hpp"
#include "movsurf/surface.hpp"

namespace movsurf {

enum class Identity { ThmMt, LemmaMt, Conj61, Conj62, ThmMth, RemarkPm, DimFormula };

const char* identity_name(Identity id) noexcept;
Identity parse_identity(std::string_view name);

struct SuiteParams {
  Identity identity = Identity::Conj61;
  Shape shape;
  int d = 2;
  int trials = 10;
  std::uint64_t seed = 1;
};

// One exact comparison. `sign` is +1/-1 when left = sign * right.
struct CheckResult {
  int trial = 0;
  std::string name;
  std::string relation;
  std::string left;
  std::string right;
  int sign = 0;
  bool pass = false;
};

struct TrialRecord {
  int trial = 0;
  std::string instance;
  std::optional<std::string> index_set;
};

struct Report {
  std::string command;
  std::string identity;
  std::string relation;
  std::vector<TrialRecord> trials;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  int resamples = 0;

  bool passed() const;
  int pass_count() const;
  std::string to_text() const;
  std::string to_json() const;
};

// Random instance stream; degenerate draws are resampled and counted.
Report run_suite(const SuiteParams& params);

// Single given surface. `index_set` applies to triangular identities.
Report verify_surface(const ParamSurface& s, Identity identity, int d,
                      std::optional<IndexSetI> index_set = {});

}  // namespace movsurf
