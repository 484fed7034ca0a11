#pragma once

#include "dcs/coeff_seq.hpp"
#include "dcs/dirichlet.hpp"
#include "dcs/dual.hpp"
#include "dcs/enclosure.hpp"
#include "dcs/errors.hpp"
#include "dcs/exponent.hpp"
#include "dcs/multiplier.hpp"
#include "dcs/norms.hpp"
#include "dcs/parallel.hpp"
#include "dcs/point_eval.hpp"
#include "dcs/primes.hpp"
#include "dcs/sampling.hpp"
#include "dcs/schur.hpp"
#include "dcs/special.hpp"
#include "dcs/zeta.hpp"
