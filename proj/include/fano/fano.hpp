#pragma once

#include "fano/bott.hpp"
#include "fano/combinatorics.hpp"
#include "fano/errors.hpp"
#include "fano/poly_oracle.hpp"
#include "fano/report.hpp"
#include "fano/weights.hpp"
