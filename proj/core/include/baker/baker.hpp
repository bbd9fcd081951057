#pragma once

#include "baker/dimension.hpp"
#include "baker/dynamics.hpp"
#include "baker/errors.hpp"
#include "baker/measures.hpp"
#include "baker/parallel.hpp"
#include "baker/params.hpp"
#include "baker/point_set.hpp"
#include "baker/rng.hpp"
#include "baker/symbolic.hpp"
