#pragma once

#include "fibfractal/bench.hpp"
#include "fibfractal/congruence.hpp"
#include "fibfractal/exact_core.hpp"
#include "fibfractal/natural.hpp"
#include "fibfractal/radix.hpp"
#include "fibfractal/st_poly.hpp"
#include "fibfractal/tilings.hpp"
#include "fibfractal/triangle.hpp"
