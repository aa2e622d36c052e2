#pragma once

// Umbrella header for the whole library.

#include "taftcat/integer.hpp"
#include "taftcat/polynomial.hpp"
#include "taftcat/quantum.hpp"
#include "taftcat/cyclotomic_field.hpp"
#include "taftcat/matrix.hpp"
#include "taftcat/laurent.hpp"
#include "taftcat/grading.hpp"
#include "taftcat/module.hpp"
#include "taftcat/random_module.hpp"
#include "taftcat/subquotient.hpp"
#include "taftcat/functors.hpp"
#include "taftcat/k0.hpp"
#include "taftcat/theorem.hpp"
#include "taftcat/module_io.hpp"
