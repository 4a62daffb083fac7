#pragma once

#include "hyperabc/canonical.hpp"
#include "hyperabc/closed_forms.hpp"
#include "hyperabc/generators.hpp"
#include "hyperabc/hypergraph.hpp"
#include "hyperabc/polynomial.hpp"
#include "hyperabc/spectral.hpp"
#include "hyperabc/tensor.hpp"
#include "hyperabc/uhg_io.hpp"
#include "hyperabc/verify.hpp"
