#pragma once

#include "madkit/batch.hpp"
#include "madkit/decompose.hpp"
#include "madkit/errors.hpp"
#include "madkit/flow.hpp"
#include "madkit/generators.hpp"
#include "madkit/graph.hpp"
#include "madkit/io.hpp"
#include "madkit/mad.hpp"
#include "madkit/oracle.hpp"
#include "madkit/orientation.hpp"
#include "madkit/rational.hpp"
#include "madkit/report.hpp"
