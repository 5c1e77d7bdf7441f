#pragma once

// Umbrella header.

#include "mpk/field.hpp"
#include "mpk/linalg.hpp"
#include "mpk/tensor.hpp"
#include "mpk/ops.hpp"
#include "mpk/algebra.hpp"
#include "mpk/report.hpp"
#include "mpk/laws.hpp"
#include "mpk/reps.hpp"
#include "mpk/matched.hpp"
#include "mpk/manin.hpp"
#include "mpk/ybe.hpp"
#include "mpk/post.hpp"
#include "mpk/search.hpp"
#include "mpk/dsl.hpp"
#include "mpk/dsl_write.hpp"
#include "mpk/json_report.hpp"
