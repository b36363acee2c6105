#pragma once

// Umbrella header.

#include "brieskorn/certify.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/invariants.hpp"
#include "brieskorn/jointop.hpp"
#include "brieskorn/rational.hpp"
#include "brieskorn/reeb.hpp"
#include "brieskorn/tuples.hpp"
#include "brieskorn/verify.hpp"
#include "brieskorn/zerodim.hpp"
