#pragma once

#include "minorstar/rational.hpp"
#include "minorstar/plane_graph.hpp"
#include "minorstar/planar_code.hpp"
#include "minorstar/pattern.hpp"
#include "minorstar/star_match.hpp"
#include "minorstar/discharge.hpp"
#include "minorstar/generate.hpp"
#include "minorstar/claims.hpp"
#include "minorstar/report.hpp"
