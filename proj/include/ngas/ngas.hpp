#pragma once

#include "ngas/gap.hpp"
#include "ngas/io.hpp"
#include "ngas/ipt.hpp"
#include "ngas/model.hpp"
#include "ngas/moments.hpp"
#include "ngas/oracle.hpp"
#include "ngas/qft.hpp"
#include "ngas/quadrature.hpp"
#include "ngas/spectrum.hpp"
#include "ngas/susy.hpp"
#include "ngas/tables.hpp"
#include "ngas/vacuum.hpp"
