#pragma once

// Umbrella header: the full phonon-network toolkit.

#include "phononet/bounds.hpp"
#include "phononet/capacity.hpp"
#include "phononet/circulant.hpp"
#include "phononet/csv.hpp"
#include "phononet/errors.hpp"
#include "phononet/graph.hpp"
#include "phononet/spectral.hpp"
#include "phononet/svg.hpp"
#include "phononet/sweep.hpp"
#include "phononet/thermo.hpp"
