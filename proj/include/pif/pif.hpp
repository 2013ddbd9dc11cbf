#pragma once

// Umbrella header for the preference-informed fairness toolkit.

#include "pif/audit.hpp"
#include "pif/core.hpp"
#include "pif/generators.hpp"
#include "pif/groupfair.hpp"
#include "pif/json_io.hpp"
#include "pif/lp.hpp"
#include "pif/optimizer.hpp"
#include "pif/polytope.hpp"
#include "pif/preferences.hpp"
#include "pif/sampling.hpp"
#include "pif/types.hpp"
