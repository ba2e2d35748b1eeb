#pragma once

// Umbrella header.
#include "quadcf/bigint.hpp"
#include "quadcf/chebyshev.hpp"
#include "quadcf/convergents.hpp"
#include "quadcf/decompose.hpp"
#include "quadcf/errors.hpp"
#include "quadcf/expansion.hpp"
#include "quadcf/fast_convergents.hpp"
#include "quadcf/gaussian.hpp"
#include "quadcf/householder.hpp"
#include "quadcf/hurwitz.hpp"
#include "quadcf/identities.hpp"
#include "quadcf/mat2.hpp"
#include "quadcf/op_counter.hpp"
#include "quadcf/parse.hpp"
#include "quadcf/quad_ext.hpp"
#include "quadcf/surd.hpp"
#include "quadcf/traces.hpp"
