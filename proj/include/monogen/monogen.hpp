// Umbrella header: the whole library in one include.
#ifndef MONOGEN_MONOGEN_HPP
#define MONOGEN_MONOGEN_HPP

#include "monogen/bernoulli.hpp"
#include "monogen/config.hpp"
#include "monogen/construction.hpp"
#include "monogen/factor.hpp"
#include "monogen/index_bound.hpp"
#include "monogen/integer.hpp"
#include "monogen/json_io.hpp"
#include "monogen/newton.hpp"
#include "monogen/polynomial.hpp"
#include "monogen/polynomial_mod.hpp"
#include "monogen/primes.hpp"
#include "monogen/rational.hpp"
#include "monogen/render.hpp"
#include "monogen/resultant.hpp"
#include "monogen/stirling.hpp"

#endif
