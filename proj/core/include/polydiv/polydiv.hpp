#pragma once

#include "polydiv/closedform.hpp"
#include "polydiv/detengine.hpp"
#include "polydiv/division.hpp"
#include "polydiv/errors.hpp"
#include "polydiv/interpolate.hpp"
#include "polydiv/matrix.hpp"
#include "polydiv/methods.hpp"
#include "polydiv/polynomial.hpp"
#include "polydiv/rational.hpp"
