#pragma once

#include "cmperm/cm.hpp"
#include "cmperm/graph.hpp"
#include "cmperm/homology.hpp"
#include "cmperm/io.hpp"
#include "cmperm/permutation.hpp"
#include "cmperm/poset.hpp"
#include "cmperm/reisner.hpp"
#include "cmperm/survey.hpp"
#include "cmperm/upo.hpp"
