#pragma once

#include "gqc/bounds.hpp"
#include "gqc/checks.hpp"
#include "gqc/errors.hpp"
#include "gqc/linalg.hpp"
#include "gqc/measures.hpp"
#include "gqc/partitions.hpp"
#include "gqc/state.hpp"
#include "gqc/states.hpp"
#include "gqc/sweeps.hpp"
