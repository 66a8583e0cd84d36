#pragma once

// Umbrella header.

#include "epinets/analysis.hpp"
#include "epinets/collective.hpp"
#include "epinets/core.hpp"
#include "epinets/dot.hpp"
#include "epinets/formula.hpp"
#include "epinets/json_io.hpp"
#include "epinets/report.hpp"
#include "epinets/socnet.hpp"
#include "epinets/states.hpp"
#include "epinets/survey.hpp"
