#pragma once

#include "qcubic/constants/residues.hpp"
#include "qcubic/constants/special.hpp"
