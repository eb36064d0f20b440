#pragma once

#include "cmvar/algebras.hpp"
#include "cmvar/distances.hpp"
#include "cmvar/errors.hpp"
#include "cmvar/exact.hpp"
#include "cmvar/linalg.hpp"
#include "cmvar/lorentz.hpp"
#include "cmvar/polygons.hpp"
#include "cmvar/rigidity.hpp"
#include "cmvar/varieties.hpp"
