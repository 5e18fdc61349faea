#pragma once

#include "nde/common.hpp"
#include "nde/exact.hpp"
#include "nde/cache.hpp"
#include "nde/quadrature.hpp"
#include "nde/oracles.hpp"
#include "nde/series.hpp"
#include "nde/remainders.hpp"
#include "nde/bounds.hpp"
#include "nde/terminant.hpp"
#include "nde/hyper.hpp"
#include "nde/late.hpp"
