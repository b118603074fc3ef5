#pragma once

#include <riordan/error.hpp>
#include <riordan/scalar.hpp>
#include <riordan/series.hpp>
#include <riordan/larray.hpp>
#include <riordan/riordan_array.hpp>
#include <riordan/operators.hpp>
#include <riordan/functionals.hpp>
#include <riordan/twoweight.hpp>
#include <riordan/json.hpp>
#include <riordan/session.hpp>
