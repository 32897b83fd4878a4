#pragma once

#include "swgen/confluence_graph.hpp"
#include "swgen/edge_list.hpp"
#include "swgen/error.hpp"
#include "swgen/graph.hpp"
#include "swgen/metrics.hpp"
#include "swgen/parallel.hpp"
#include "swgen/pipeline.hpp"
#include "swgen/random_walk.hpp"
#include "swgen/structure.hpp"
