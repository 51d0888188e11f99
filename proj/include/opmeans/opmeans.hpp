#pragma once

#include "opmeans/certifier.hpp"
#include "opmeans/eigen_kernel.hpp"
#include "opmeans/errors.hpp"
#include "opmeans/matrix.hpp"
#include "opmeans/operator_means.hpp"
#include "opmeans/random.hpp"
#include "opmeans/sandwich.hpp"
#include "opmeans/scalar_bounds.hpp"
