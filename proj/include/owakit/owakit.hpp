#pragma once

// Umbrella header for the owakit library.

#include "owakit/binomial.hpp"
#include "owakit/decimal.hpp"
#include "owakit/decomposition.hpp"
#include "owakit/minimax.hpp"
#include "owakit/owa.hpp"
#include "owakit/simplex.hpp"
#include "owakit/version.hpp"
