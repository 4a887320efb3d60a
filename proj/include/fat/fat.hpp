#pragma once

// Umbrella header: simulation of finite automata that read advice from
// separate tapes, the construction catalog, exact acceptance probabilities,
// and the brute-force lower-bound machinery.

#include "fat/advice.hpp"
#include "fat/alphabet.hpp"
#include "fat/analysis.hpp"
#include "fat/base.hpp"
#include "fat/catalog.hpp"
#include "fat/engine.hpp"
#include "fat/fatfile.hpp"
#include "fat/machine.hpp"
#include "fat/oracles.hpp"
#include "fat/rational.hpp"
#include "fat/specialize.hpp"
#include "fat/stochastic.hpp"
#include "fat/sweep.hpp"
