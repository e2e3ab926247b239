#pragma once

// Umbrella header: the whole library except the JSON-dependent layers
// (instance.hpp, graph_export.hpp), which pull in the vendored nlohmann/json.

#include "optseg/bigint.hpp"
#include "optseg/core.hpp"
#include "optseg/dp.hpp"
#include "optseg/enumerate.hpp"
#include "optseg/errors.hpp"
#include "optseg/genfunc.hpp"
#include "optseg/graph.hpp"
#include "optseg/polynomial.hpp"
#include "optseg/random_gen.hpp"
