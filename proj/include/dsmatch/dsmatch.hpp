#pragma once

// Umbrella header.

#include "dsmatch/checkers.hpp"
#include "dsmatch/core.hpp"
#include "dsmatch/csv.hpp"
#include "dsmatch/errors.hpp"
#include "dsmatch/fairness.hpp"
#include "dsmatch/max_matching.hpp"
#include "dsmatch/oracles.hpp"
#include "dsmatch/relations.hpp"
#include "dsmatch/uniform.hpp"
