#pragma once

#include "driverset/charpoly.hpp"
#include "driverset/classification.hpp"
#include "driverset/controllability.hpp"
#include "driverset/edge_list.hpp"
#include "driverset/eigen.hpp"
#include "driverset/errors.hpp"
#include "driverset/graph.hpp"
#include "driverset/matrix.hpp"
#include "driverset/parallel.hpp"
#include "driverset/polynomial.hpp"
#include "driverset/rational.hpp"
#include "driverset/reference.hpp"
#include "driverset/report.hpp"
#include "driverset/weighted_system.hpp"
#include "driverset/zero_forcing.hpp"
