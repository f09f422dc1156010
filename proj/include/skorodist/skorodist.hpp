#pragma once

// Everything except JSON I/O (skorodist/io.hpp), which needs nlohmann/json.

#include "betweenness.hpp"
#include "chain.hpp"
#include "diagnostics.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "metric.hpp"
#include "modulus.hpp"
#include "ordered_set.hpp"
#include "path.hpp"
#include "path_metric.hpp"
#include "split_time.hpp"
#include "squeeze.hpp"
