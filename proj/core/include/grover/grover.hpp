#pragma once

#include "grover/errors.hpp"
#include "grover/graphs.hpp"
#include "grover/numtheory.hpp"
#include "grover/periodicity.hpp"
#include "grover/pst.hpp"
#include "grover/spectra.hpp"
#include "grover/walk.hpp"
