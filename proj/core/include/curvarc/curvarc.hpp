#pragma once

#include "curvarc/contour.hpp"
#include "curvarc/correspondence.hpp"
#include "curvarc/errors.hpp"
#include "curvarc/invariants.hpp"
#include "curvarc/io.hpp"
#include "curvarc/reparam.hpp"
#include "curvarc/spline.hpp"
#include "curvarc/svg.hpp"
#include "curvarc/vec2.hpp"
