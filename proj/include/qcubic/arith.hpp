#pragma once

#include "qcubic/arith/character.hpp"
#include "qcubic/arith/factor.hpp"
#include "qcubic/arith/kronecker.hpp"
#include "qcubic/arith/sieve.hpp"
