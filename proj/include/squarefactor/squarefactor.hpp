#pragma once

#include "squarefactor/error.hpp"
#include "squarefactor/vertex_set.hpp"
#include "squarefactor/graph.hpp"
#include "squarefactor/graph_io.hpp"
#include "squarefactor/pattern.hpp"
#include "squarefactor/trails.hpp"
#include "squarefactor/search.hpp"
#include "squarefactor/extraction.hpp"
#include "squarefactor/solver.hpp"
#include "squarefactor/harness.hpp"
