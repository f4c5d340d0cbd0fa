#pragma once

#include "torusq/charpoly.hpp"
#include "torusq/classical.hpp"
#include "torusq/duality.hpp"
#include "torusq/errors.hpp"
#include "torusq/moduli.hpp"
#include "torusq/operators.hpp"
#include "torusq/polynomial.hpp"
#include "torusq/spectral.hpp"
#include "torusq/types.hpp"
#include "torusq/vacuum.hpp"
