#pragma once

// Umbrella header.

#include "fibcheb/connection.hpp"
#include "fibcheb/exact.hpp"
#include "fibcheb/hypergeom.hpp"
#include "fibcheb/identities.hpp"
#include "fibcheb/integrals.hpp"
#include "fibcheb/polynomial.hpp"
#include "fibcheb/report.hpp"
#include "fibcheb/runner.hpp"
#include "fibcheb/sequences.hpp"
#include "fibcheb/serialize.hpp"
