#ifndef FSL_FSL_HPP
#define FSL_FSL_HPP

#include "common.hpp"
#include "rootsys.hpp"
#include "lattice.hpp"
#include "fflv.hpp"
#include "crystal.hpp"
#include "degenmap.hpp"
#include "wedge.hpp"
#include "verify.hpp"
#include "io.hpp"

#endif // FSL_FSL_HPP
