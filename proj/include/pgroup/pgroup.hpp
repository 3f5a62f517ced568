#pragma once
// Umbrella header for the library surface (everything except the CLI).

#include "pgroup/catalogue.hpp"
#include "pgroup/construct.hpp"
#include "pgroup/core.hpp"
#include "pgroup/decompose.hpp"
#include "pgroup/oracle.hpp"
#include "pgroup/structure.hpp"
#include "pgroup/verify.hpp"
