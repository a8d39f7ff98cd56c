#pragma once

// Umbrella header.

#include "satotate/artin.hpp"
#include "satotate/curves.hpp"
#include "satotate/errors.hpp"
#include "satotate/ff/factor_pattern.hpp"
#include "satotate/ff/field.hpp"
#include "satotate/ff/modular.hpp"
#include "satotate/ff/poly.hpp"
#include "satotate/ff/primes.hpp"
#include "satotate/lpoly.hpp"
#include "satotate/moment_sequence.hpp"
#include "satotate/numeric.hpp"
#include "satotate/stats/accumulator.hpp"
#include "satotate/stats/classify.hpp"
#include "satotate/stats/histogram.hpp"
#include "satotate/stgroups/catalog.hpp"
#include "satotate/stgroups/engines.hpp"
#include "satotate/stgroups/measure.hpp"
#include "satotate/stgroups/quadrature.hpp"
#include "satotate/stgroups/sampler.hpp"
#include "satotate/survey.hpp"
