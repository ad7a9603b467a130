#ifndef MULTICURVE_MULTICURVE_HPP
#define MULTICURVE_MULTICURVE_HPP

#include "cone.hpp"
#include "curve.hpp"
#include "errors.hpp"
#include "json_io.hpp"
#include "linalg.hpp"
#include "monomial_ideal.hpp"
#include "multiplier.hpp"
#include "newton.hpp"
#include "numeric.hpp"
#include "parse.hpp"
#include "polynomial.hpp"
#include "valuation.hpp"
#include "vec3.hpp"

#endif
