#pragma once

#include "qineq/errors.hpp"
#include "qineq/special_functions.hpp"
#include "qineq/quadrature.hpp"
#include "qineq/random.hpp"
#include "qineq/parallel.hpp"
#include "qineq/sample.hpp"
#include "qineq/distributions.hpp"
#include "qineq/curve_table.hpp"
#include "qineq/empirical.hpp"
#include "qineq/curves.hpp"
#include "qineq/coefficients.hpp"
#include "qineq/transfer.hpp"
#include "qineq/influence.hpp"
#include "qineq/simulation.hpp"
#include "qineq/convexity.hpp"
