#pragma once

#include "orbitkit/catalog.hpp"
#include "orbitkit/chevalley.hpp"
#include "orbitkit/enumerate.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/form.hpp"
#include "orbitkit/linalg.hpp"
#include "orbitkit/prime_field.hpp"
#include "orbitkit/root_expr.hpp"
#include "orbitkit/root_system.hpp"
#include "orbitkit/weyl.hpp"
