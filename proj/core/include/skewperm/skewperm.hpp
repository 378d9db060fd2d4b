#pragma once

// Umbrella header for the whole library.

#include "skewperm/arith.hpp"
#include "skewperm/graph.hpp"
#include "skewperm/io.hpp"
#include "skewperm/matrix.hpp"
#include "skewperm/orientation.hpp"
#include "skewperm/permanent.hpp"
#include "skewperm/poly.hpp"
#include "skewperm/sachs.hpp"
#include "skewperm/spectra.hpp"
#include "skewperm/threads.hpp"
#include "skewperm/verify.hpp"
