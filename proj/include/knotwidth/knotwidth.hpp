// knotwidth.hpp -- umbrella header.

#pragma once

#include "knotwidth/diagram.hpp"
#include "knotwidth/errors.hpp"
#include "knotwidth/reduce.hpp"
#include "knotwidth/report.hpp"
#include "knotwidth/verify.hpp"
#include "knotwidth/word.hpp"
