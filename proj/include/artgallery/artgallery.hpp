#pragma once

#include "coverage.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "formula.hpp"
#include "gadgets.hpp"
#include "gallery.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "notched_room.hpp"
#include "rational.hpp"
#include "surface.hpp"
#include "svg.hpp"
#include "verifier.hpp"
#include "visibility.hpp"
