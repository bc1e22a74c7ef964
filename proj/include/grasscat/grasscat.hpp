#pragma once

#include "grasscat/cocycle.hpp"
#include "grasscat/cocycle_io.hpp"
#include "grasscat/core.hpp"
#include "grasscat/grassmann.hpp"
#include "grasscat/instances.hpp"
#include "grasscat/internal_cat.hpp"
#include "grasscat/linalg.hpp"
#include "grasscat/morphism.hpp"
#include "grasscat/report.hpp"
#include "grasscat/rng.hpp"
#include "grasscat/semiring.hpp"
