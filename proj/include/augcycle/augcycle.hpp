#pragma once

// Convenience include for the whole library. The CLI layer is left out so
// that library users do not pick up a CLI11 dependency; include
// augcycle/cli.hpp separately for that.

#include "augcycle/acyclic.hpp"
#include "augcycle/core.hpp"
#include "augcycle/cycles.hpp"
#include "augcycle/io.hpp"
#include "augcycle/oracle.hpp"
#include "augcycle/quadcycle.hpp"
#include "augcycle/rng.hpp"
#include "augcycle/tricycle.hpp"
