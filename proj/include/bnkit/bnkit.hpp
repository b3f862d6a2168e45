/*!
  \file bnkit.hpp
  \brief Umbrella header
*/

#pragma once

#include "canalization.hpp"
#include "cnet.hpp"
#include "control.hpp"
#include "core.hpp"
#include "dcm.hpp"
#include "dot.hpp"
#include "dynamics.hpp"
#include "minimize.hpp"
#include "models.hpp"
#include "parallel.hpp"
