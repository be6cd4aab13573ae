#pragma once
// Everything: groups, functions, convolutions, energies, checks, scenarios, increments, I/O, suite.

#include "hen/checks.hpp"
#include "hen/config.hpp"
#include "hen/convolution.hpp"
#include "hen/energy.hpp"
#include "hen/errors.hpp"
#include "hen/fourier.hpp"
#include "hen/function.hpp"
#include "hen/group.hpp"
#include "hen/increment.hpp"
#include "hen/io.hpp"
#include "hen/numeric.hpp"
#include "hen/parallel.hpp"
#include "hen/rng.hpp"
#include "hen/scenarios.hpp"
#include "hen/subspace.hpp"
#include "hen/suite.hpp"
