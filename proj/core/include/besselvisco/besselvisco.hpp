#pragma once

#include "besselvisco/asymptotics.hpp"
#include "besselvisco/error.hpp"
#include "besselvisco/hereditary.hpp"
#include "besselvisco/io.hpp"
#include "besselvisco/laplace.hpp"
#include "besselvisco/specfun.hpp"
#include "besselvisco/timedomain.hpp"
#include "besselvisco/validation.hpp"
#include "besselvisco/zeros.hpp"
