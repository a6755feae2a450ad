#pragma once

#include "pivd/errors.hpp"
#include "pivd/generator.hpp"
#include "pivd/graph.hpp"
#include "pivd/hitting_set.hpp"
#include "pivd/io.hpp"
#include "pivd/kernel.hpp"
#include "pivd/obstructions.hpp"
#include "pivd/proper_interval.hpp"
#include "pivd/solver.hpp"
