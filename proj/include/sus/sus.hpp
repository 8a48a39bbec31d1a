#pragma once

#include "bit_vector.hpp"
#include "build_log.hpp"
#include "common.hpp"
#include "container.hpp"
#include "interval_sus.hpp"
#include "mus.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"
#include "point_sus.hpp"
#include "range_query.hpp"
#include "suffix_arrays.hpp"
#include "ternary_seq.hpp"
#include "verify.hpp"
