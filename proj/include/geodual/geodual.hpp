#pragma once

#include "geodual/ccm.hpp"
#include "geodual/critical_base.hpp"
#include "geodual/dualization.hpp"
#include "geodual/element_set.hpp"
#include "geodual/errors.hpp"
#include "geodual/ground_set.hpp"
#include "geodual/hypergraph.hpp"
#include "geodual/implicational_base.hpp"
#include "geodual/io.hpp"
#include "geodual/meet_family.hpp"
#include "geodual/ranking.hpp"
#include "geodual/sid.hpp"
