#pragma once

// Umbrella header for the whole library.

#include "succmin/core.hpp"
#include "succmin/linalg.hpp"
#include "succmin/polynomial.hpp"
#include "succmin/radix.hpp"
#include "succmin/nfield.hpp"
#include "succmin/geometry.hpp"
#include "succmin/embedding.hpp"
#include "succmin/lattice.hpp"
#include "succmin/approximation.hpp"
#include "succmin/scrollar.hpp"
#include "succmin/io.hpp"
#include "succmin/suites.hpp"
