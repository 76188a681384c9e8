#pragma once

#include "starrad/caratheodory.hpp"
#include "starrad/classes.hpp"
#include "starrad/errors.hpp"
#include "starrad/extremal.hpp"
#include "starrad/poly.hpp"
#include "starrad/radius.hpp"
#include "starrad/regions.hpp"
#include "starrad/sampler.hpp"
