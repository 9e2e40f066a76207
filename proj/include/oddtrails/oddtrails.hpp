#pragma once

// Packing and covering odd (u,v)-trails in multigraphs: tau <= 2 nu + 1
// with verifiable certificates, exact desk-scale oracles, and the tight
// example families as fixtures.

#include "oddtrails/apath.hpp"
#include "oddtrails/contacts.hpp"
#include "oddtrails/driver.hpp"
#include "oddtrails/edge_set.hpp"
#include "oddtrails/errors.hpp"
#include "oddtrails/fixtures.hpp"
#include "oddtrails/flow.hpp"
#include "oddtrails/gadget.hpp"
#include "oddtrails/graph.hpp"
#include "oddtrails/json_io.hpp"
#include "oddtrails/minmax.hpp"
#include "oddtrails/oracle.hpp"
#include "oddtrails/trail.hpp"
#include "oddtrails/untangle.hpp"
