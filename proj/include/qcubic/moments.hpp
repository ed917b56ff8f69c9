#pragma once

#include "qcubic/moments/fit.hpp"
#include "qcubic/moments/mellin.hpp"
#include "qcubic/moments/moment.hpp"
#include "qcubic/moments/prediction.hpp"
#include "qcubic/moments/weight.hpp"
