#pragma once

#include "gpnt/bottleneck.hpp"
#include "gpnt/bound.hpp"
#include "gpnt/chain_complex.hpp"
#include "gpnt/chain_map.hpp"
#include "gpnt/cover.hpp"
#include "gpnt/cover_io.hpp"
#include "gpnt/errors.hpp"
#include "gpnt/filtration.hpp"
#include "gpnt/flag_blowup.hpp"
#include "gpnt/generators.hpp"
#include "gpnt/gf2.hpp"
#include "gpnt/interleaving.hpp"
#include "gpnt/parallel.hpp"
#include "gpnt/persistence.hpp"
#include "gpnt/report.hpp"
#include "gpnt/simplex.hpp"
