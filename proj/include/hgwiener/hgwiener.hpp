#pragma once

#include "berge.hpp"
#include "canonical.hpp"
#include "distance.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "formulas.hpp"
#include "hypergraph.hpp"
#include "minimality.hpp"
