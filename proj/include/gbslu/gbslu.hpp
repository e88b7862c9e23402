#pragma once

#include "gbslu/error.hpp"
#include "gbslu/modmath.hpp"
#include "gbslu/gpm.hpp"
#include "gbslu/invariants.hpp"
#include "gbslu/transform.hpp"
#include "gbslu/classify.hpp"
#include "gbslu/report.hpp"
#include "gbslu/config.hpp"
#include "gbslu/oracle.hpp"
