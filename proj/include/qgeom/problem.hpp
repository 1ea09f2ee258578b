#pragma once

// Problem files: JSON with
//   dim          integer
//   state        [[re, im], ...]                   (optional with grid.gaussian)
//   observables  {name: [[[re, im], ...], ...]}    row-major n×n
//   grid         {n, length, hbar, gaussian?: {x0, p0, sigma}}   optional
//   options      {tol, metric_scale, seed}         optional
// A grid contributes observables "x" and "p" unless the file defines them.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "qgeom/canonical.hpp"

namespace qgeom {

struct ProblemOptions {
  double tol = 1e-6;
  double metric_scale = 1.0;
  std::uint64_t seed = 0;
};

struct ProblemFile {
  int dim = 0;
  std::optional<State> state;
  std::vector<std::pair<std::string, Observable>> observables;
  std::optional<Grid> grid;
  ProblemOptions options;

  [[nodiscard]] const Observable& observable(const std::string& name) const;
  [[nodiscard]] const State& require_state() const;
};

/// `tol_override` replaces options.tol before the state is validated.
ProblemFile parse_problem(const nlohmann::json& j,
                          std::optional<double> tol_override = std::nullopt);
ProblemFile load_problem(const std::filesystem::path& path,
                         std::optional<double> tol_override = std::nullopt);

}  // namespace qgeom
