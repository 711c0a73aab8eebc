#pragma once

#include "phaselab/lab/boost.hpp"
#include "phaselab/lab/diagnostics.hpp"
#include "phaselab/lab/evolve.hpp"
#include "phaselab/lab/experiments.hpp"
#include "phaselab/lab/grid.hpp"
#include "phaselab/lab/madelung.hpp"
#include "phaselab/lab/spectral.hpp"
#include "phaselab/lab/wavefield.hpp"
