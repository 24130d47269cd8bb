#pragma once

#include "redoku/batch.hpp"
#include "redoku/candidate_set.hpp"
#include "redoku/cell.hpp"
#include "redoku/entropy.hpp"
#include "redoku/grid.hpp"
#include "redoku/oracle.hpp"
#include "redoku/puzzle_io.hpp"
#include "redoku/reduction.hpp"
#include "redoku/solve.hpp"
#include "redoku/topology.hpp"
