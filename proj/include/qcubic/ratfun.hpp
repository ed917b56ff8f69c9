#pragma once

#include "qcubic/ratfun/identity.hpp"
#include "qcubic/ratfun/lemma.hpp"
#include "qcubic/ratfun/local_correction.hpp"
#include "qcubic/ratfun/polynomial.hpp"
#include "qcubic/ratfun/ppart.hpp"
#include "qcubic/ratfun/rational_function.hpp"
