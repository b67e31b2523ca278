#pragma once

#include "lorageo/analytics.hpp"
#include "lorageo/common.hpp"
#include "lorageo/config.hpp"
#include "lorageo/geometry.hpp"
#include "lorageo/model.hpp"
#include "lorageo/montecarlo.hpp"
#include "lorageo/numerics.hpp"
#include "lorageo/optimizer.hpp"
#include "lorageo/spread.hpp"
#include "lorageo/traffic.hpp"
