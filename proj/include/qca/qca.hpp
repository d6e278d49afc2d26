// qca.hpp — umbrella header.

#pragma once

#include "qca/scalar.hpp"
#include "qca/linalg.hpp"
#include "qca/context.hpp"
#include "qca/rep.hpp"
#include "qca/catalog.hpp"
#include "qca/torus.hpp"
#include "qca/hall.hpp"
#include "qca/report.hpp"
#include "qca/checks.hpp"
#include "qca/example.hpp"
