#pragma once

#include "chatelet/bigint.hpp"
#include "chatelet/constructor.hpp"
#include "chatelet/cubic.hpp"
#include "chatelet/factor.hpp"
#include "chatelet/gaussian.hpp"
#include "chatelet/harness.hpp"
#include "chatelet/poly.hpp"
#include "chatelet/theta.hpp"
#include "chatelet/transfer.hpp"
#include "chatelet/two_squares.hpp"
