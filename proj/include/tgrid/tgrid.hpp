#pragma once

// Umbrella header for the library (the CLI lives in tgrid/cli.hpp).

#include "tgrid/error.hpp"
#include "tgrid/geometry.hpp"
#include "tgrid/grid_function.hpp"
#include "tgrid/oracle.hpp"
#include "tgrid/properties.hpp"
#include "tgrid/text_format.hpp"
#include "tgrid/threshold.hpp"
#include "tgrid/two_threshold.hpp"
