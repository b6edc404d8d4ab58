#pragma once

#include "qutrit/dynamics.hpp"
#include "qutrit/geometry.hpp"
#include "qutrit/io.hpp"
#include "qutrit/linalg.hpp"
#include "qutrit/purestates.hpp"
#include "qutrit/random.hpp"
#include "qutrit/report.hpp"
#include "qutrit/spin1.hpp"
#include "qutrit/state.hpp"
