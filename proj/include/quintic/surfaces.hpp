#pragma once

#include "quintic/cubic.hpp"
#include "quintic/gaussian.hpp"
#include "quintic/mixed.hpp"
#include "quintic/symmetric.hpp"
#include "quintic/theorem1.hpp"
#include "quintic/theorem2.hpp"
