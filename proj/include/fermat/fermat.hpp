#pragma once

// Umbrella header for the fermat library.

#include "fermat/errors.hpp"
#include "fermat/geometry.hpp"
#include "fermat/objective.hpp"
#include "fermat/oracle.hpp"
#include "fermat/solver.hpp"
#include "fermat/svg.hpp"
#include "fermat/cli.hpp"
