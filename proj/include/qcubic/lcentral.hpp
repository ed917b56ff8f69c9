#pragma once

#include "qcubic/lcentral/batch.hpp"
#include "qcubic/lcentral/functional_equation.hpp"
#include "qcubic/lcentral/kernel.hpp"
#include "qcubic/lcentral/lvalue.hpp"
