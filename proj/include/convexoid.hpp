#pragma once

#include "convexoid/catalog.hpp"
#include "convexoid/codomain.hpp"
#include "convexoid/codomain_laws.hpp"
#include "convexoid/codomains.hpp"
#include "convexoid/commands.hpp"
#include "convexoid/conjugate.hpp"
#include "convexoid/duality.hpp"
#include "convexoid/error.hpp"
#include "convexoid/functional_gallery.hpp"
#include "convexoid/graph_topos.hpp"
#include "convexoid/instance.hpp"
#include "convexoid/instance_file.hpp"
#include "convexoid/io.hpp"
#include "convexoid/oracles.hpp"
#include "convexoid/rational.hpp"
#include "convexoid/report.hpp"
#include "convexoid/structural_gallery.hpp"
#include "convexoid/verify.hpp"
