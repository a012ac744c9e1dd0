#pragma once

#include "bwperm/chain_solver.hpp"
#include "bwperm/crosscheck.hpp"
#include "bwperm/frontier.hpp"
#include "bwperm/graph.hpp"
#include "bwperm/instance_io.hpp"
#include "bwperm/model.hpp"
#include "bwperm/oracle.hpp"
#include "bwperm/piece_solver.hpp"
