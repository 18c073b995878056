#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "livlab/cocycle.hpp"
#include "livlab/skew.hpp"
#include "livlab/torus.hpp"

namespace livlab {

// Batch-experiment description, parsed from flat key-value text with section
// headers.  Unknown keys are hard errors.  Format:
//
//   [base]
//   matrix 2 1 1 1
//   [cocycle]
//   mean 0.0
//   1 0 1.0 0.0        # k1 k2 a b
//   [fiber]
//   kind circle
//   [run]
//   grid_n 64
//   tol 1e-7
//   seed 42
//   max_period 8
//   n_alternates 4
//   radius 2.0
//   anchor 0 0
//   [path]             # optional, for the pcf subcommand
//   quad 0 0 0.3 0.2
struct PathSpec {
    enum class Kind { none, quad, between, legs };
    Kind kind = Kind::none;
    TorusPoint start;
    TorusPoint target;
    double a = 0.0, b = 0.0;
    struct LegSpec {
        char kind = 'u';
        TorusPoint start;
        double displacement = 0.0;
    };
    std::vector<LegSpec> legs;
};

struct Scenario {
    std::array<std::int64_t, 4> matrix{2, 1, 1, 1};
    std::vector<std::array<double, 4>> modes;  // k1 k2 a b (k as doubles for round-trip)
    double mean = 0.0;
    FiberKind fiber = FiberKind::circle;
    int grid_n = 64;
    double tol = 1e-7;
    std::uint64_t seed = 1;
    int max_period = 8;
    int n_alternates = 4;
    double radius = 2.0;
    TorusPoint anchor{0.0, 0.0};
    PathSpec path;

    HyperbolicAutomorphism base() const;
    FourierCocycle cocycle() const;
    SkewSystem skew() const;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& file);
std::string serialize_scenario(const Scenario& s);

}  // namespace livlab
