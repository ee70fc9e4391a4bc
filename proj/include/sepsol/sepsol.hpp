#pragma once

// Umbrella header.

#include "sepsol/antiderivative.hpp"
#include "sepsol/bundle.hpp"
#include "sepsol/cardano.hpp"
#include "sepsol/equations.hpp"
#include "sepsol/errors.hpp"
#include "sepsol/flux.hpp"
#include "sepsol/grid.hpp"
#include "sepsol/inversion.hpp"
#include "sepsol/solution.hpp"
#include "sepsol/verify.hpp"
