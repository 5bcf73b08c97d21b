#pragma once

#include "rational.hpp"
#include "laurent_poly.hpp"
#include "fraction.hpp"
#include "cayley_dickson.hpp"
#include "expr.hpp"
#include "canonical.hpp"
#include "rewrite.hpp"
#include "normalizer.hpp"
#include "presentations.hpp"
#include "verify.hpp"
#include "json_io.hpp"
