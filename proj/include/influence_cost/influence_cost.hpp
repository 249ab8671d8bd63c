#pragma once

#include "calibration.hpp"
#include "cost_engine.hpp"
#include "format.hpp"
#include "report_io.hpp"
#include "resource_io.hpp"
#include "resource_model.hpp"
#include "strategy_oracle.hpp"
#include "sweep.hpp"
#include "verification.hpp"
#include "window_sim.hpp"
