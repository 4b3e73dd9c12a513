#pragma once

#include "resetkit/brute_force.hpp"
#include "resetkit/cnf.hpp"
#include "resetkit/dfa.hpp"
#include "resetkit/dpll.hpp"
#include "resetkit/encoding.hpp"
#include "resetkit/error.hpp"
#include "resetkit/exact.hpp"
#include "resetkit/greedy.hpp"
#include "resetkit/oracle.hpp"
#include "resetkit/pair_merge.hpp"
#include "resetkit/reductions.hpp"
#include "resetkit/sat_pipeline.hpp"
#include "resetkit/state_set.hpp"
#include "resetkit/verify.hpp"
