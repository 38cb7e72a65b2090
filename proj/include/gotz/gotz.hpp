#ifndef GOTZ_GOTZ_HPP
#define GOTZ_GOTZ_HPP

#include <gotz/arith.hpp>
#include <gotz/borel.hpp>
#include <gotz/error.hpp>
#include <gotz/gaps.hpp>
#include <gotz/gotzmann.hpp>
#include <gotz/lex.hpp>
#include <gotz/monomial.hpp>
#include <gotz/sweep.hpp>

#endif
