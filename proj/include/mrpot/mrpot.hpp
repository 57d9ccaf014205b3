#pragma once

#include "centrifugal.hpp"
#include "errors.hpp"
#include "jacobi.hpp"
#include "numerov.hpp"
#include "potential.hpp"
#include "published.hpp"
#include "quantum_state.hpp"
#include "report.hpp"
#include "spectrum.hpp"
#include "units.hpp"
#include "wavefunction.hpp"
