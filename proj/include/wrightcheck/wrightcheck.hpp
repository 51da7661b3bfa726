#pragma once

#include "wrightcheck/definition_file.hpp"
#include "wrightcheck/differences.hpp"
#include "wrightcheck/errors.hpp"
#include "wrightcheck/function.hpp"
#include "wrightcheck/hamel.hpp"
#include "wrightcheck/measure_expr.hpp"
#include "wrightcheck/measures.hpp"
#include "wrightcheck/random.hpp"
#include "wrightcheck/rational.hpp"
#include "wrightcheck/report.hpp"
#include "wrightcheck/scenarios.hpp"
