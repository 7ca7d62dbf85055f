#pragma once

#include "tandem/analysis.hpp"
#include "tandem/blocking.hpp"
#include "tandem/bounds.hpp"
#include "tandem/distributions.hpp"
#include "tandem/error.hpp"
#include "tandem/random.hpp"
#include "tandem/realization.hpp"
#include "tandem/recursion.hpp"
#include "tandem/system.hpp"
