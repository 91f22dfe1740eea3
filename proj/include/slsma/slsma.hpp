#pragma once

#include "slsma/rng.hpp"
#include "slsma/terrain.hpp"
#include "slsma/trajectory.hpp"
#include "slsma/cost.hpp"
#include "slsma/benchfns.hpp"
#include "slsma/optimizer.hpp"
#include "slsma/sma.hpp"
#include "slsma/self_learning_sma.hpp"
#include "slsma/baselines.hpp"
#include "slsma/stats.hpp"
#include "slsma/scenario.hpp"
#include "slsma/runner.hpp"
#include "slsma/plots.hpp"
