#pragma once

#include "ivmono/admissibility.hpp"
#include "ivmono/check.hpp"
#include "ivmono/errors.hpp"
#include "ivmono/function.hpp"
#include "ivmono/interval.hpp"
#include "ivmono/order.hpp"
#include "ivmono/parser.hpp"
#include "ivmono/report.hpp"
#include "ivmono/sampling.hpp"
#include "ivmono/suites.hpp"
