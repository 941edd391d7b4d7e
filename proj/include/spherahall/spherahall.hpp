#pragma once

#include "spherahall/errors.hpp"
#include "spherahall/rational.hpp"
#include "spherahall/rational_function.hpp"
#include "spherahall/prime_field.hpp"
#include "spherahall/matrix.hpp"
#include "spherahall/laurent.hpp"
#include "spherahall/object.hpp"
#include "spherahall/graded_module.hpp"
#include "spherahall/category.hpp"
#include "spherahall/fp_poly.hpp"
#include "spherahall/dg.hpp"
#include "spherahall/hall.hpp"
#include "spherahall/ncpoly.hpp"
#include "spherahall/presentations.hpp"
#include "spherahall/sampling.hpp"
#include "spherahall/io.hpp"
