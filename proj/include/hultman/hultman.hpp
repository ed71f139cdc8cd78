#pragma once

#include "hultman/bigint.hpp"
#include "hultman/cycle_graph.hpp"
#include "hultman/genfunc.hpp"
#include "hultman/ginibre.hpp"
#include "hultman/parallel.hpp"
#include "hultman/permutation.hpp"
#include "hultman/polygon.hpp"
#include "hultman/polynomial.hpp"
#include "hultman/series.hpp"
#include "hultman/tables.hpp"
