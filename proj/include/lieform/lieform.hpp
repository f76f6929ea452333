#pragma once

#include "lieform/field.hpp"
#include "lieform/matrix.hpp"
#include "lieform/subspace.hpp"
#include "lieform/lie_algebra.hpp"
#include "lieform/lattice.hpp"
#include "lieform/chief.hpp"
#include "lieform/formation.hpp"
#include "lieform/derivations.hpp"
#include "lieform/enumerate.hpp"
#include "lieform/io.hpp"
#include "lieform/report.hpp"
#include "lieform/sweep.hpp"
