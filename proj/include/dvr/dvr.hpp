#pragma once

#include "dvr/element.hpp"
#include "dvr/errors.hpp"
#include "dvr/ext_int.hpp"
#include "dvr/field_spec.hpp"
#include "dvr/filtration.hpp"
#include "dvr/graded.hpp"
#include "dvr/ideals.hpp"
#include "dvr/matrix.hpp"
#include "dvr/modules_maps.hpp"
#include "dvr/poly.hpp"
#include "dvr/report.hpp"
#include "dvr/rng.hpp"
#include "dvr/scalar.hpp"
#include "dvr/specf.hpp"
#include "dvr/valued_field.hpp"
