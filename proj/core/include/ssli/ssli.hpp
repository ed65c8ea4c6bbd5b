#pragma once

#include "ssli/dominance.hpp"
#include "ssli/errors.hpp"
#include "ssli/linalg.hpp"
#include "ssli/logfun.hpp"
#include "ssli/matrixapps.hpp"
#include "ssli/rootmap.hpp"
#include "ssli/symfun.hpp"
#include "ssli/tolerance.hpp"
