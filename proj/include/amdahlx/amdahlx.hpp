// Umbrella header: the full multicore performance-modeling toolkit.

#pragma once

#include "amdahlx/dataset.hpp"
#include "amdahlx/design.hpp"
#include "amdahlx/explorer.hpp"
#include "amdahlx/features.hpp"
#include "amdahlx/io.hpp"
#include "amdahlx/model.hpp"
#include "amdahlx/ranges.hpp"
#include "amdahlx/regression.hpp"
#include "amdahlx/resources.hpp"
#include "amdahlx/rng.hpp"
#include "amdahlx/synthetic.hpp"
#include "amdahlx/validation.hpp"
