#pragma once

#include "tfam/crossval.hpp"
#include "tfam/direction.hpp"
#include "tfam/dynsys.hpp"
#include "tfam/families.hpp"
#include "tfam/io.hpp"
#include "tfam/kgraph.hpp"
#include "tfam/lattice.hpp"
#include "tfam/model.hpp"
#include "tfam/types.hpp"
