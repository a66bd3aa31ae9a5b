#pragma once
// Umbrella header for the library (the CLI layer is separate: yolk/cli.hpp).

#include "yolk/decision.hpp"
#include "yolk/geometry.hpp"
#include "yolk/io.hpp"
#include "yolk/median_lines.hpp"
#include "yolk/oracle.hpp"
#include "yolk/solver.hpp"
