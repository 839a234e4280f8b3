#pragma once

#include "pathgb/constructions.hpp"
#include "pathgb/element.hpp"
#include "pathgb/invariants.hpp"
#include "pathgb/order.hpp"
#include "pathgb/poly.hpp"
#include "pathgb/quiver.hpp"
#include "pathgb/rational.hpp"
#include "pathgb/render.hpp"
#include "pathgb/scheme.hpp"
#include "pathgb/schemefile.hpp"
#include "pathgb/variety.hpp"
