#pragma once

#include "qcubic/numeric/bigreal.hpp"
#include "qcubic/numeric/gamma.hpp"
#include "qcubic/numeric/parallel.hpp"
#include "qcubic/numeric/precision.hpp"
#include "qcubic/numeric/summation.hpp"
