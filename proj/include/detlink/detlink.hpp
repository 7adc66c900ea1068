// Umbrella header.
#pragma once

#include "detlink/bigint.hpp"
#include "detlink/determinantal.hpp"
#include "detlink/errors.hpp"
#include "detlink/groebner.hpp"
#include "detlink/lct.hpp"
#include "detlink/parser.hpp"
#include "detlink/polynomial.hpp"
#include "detlink/rational.hpp"
#include "detlink/ring.hpp"
#include "detlink/simplex.hpp"
