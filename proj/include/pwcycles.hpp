#pragma once

// Umbrella header.
#include "pwcycles/builtins.hpp"
#include "pwcycles/closing.hpp"
#include "pwcycles/report.hpp"
#include "pwcycles/scenario.hpp"
#include "pwcycles/sim.hpp"
#include "pwcycles/svg.hpp"
#include "pwcycles/sweep.hpp"
#include "pwcycles/verify.hpp"
