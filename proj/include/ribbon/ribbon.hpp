#pragma once

#include "ribbon/catalog.hpp"
#include "ribbon/document.hpp"
#include "ribbon/engine.hpp"
#include "ribbon/medial.hpp"
#include "ribbon/operations.hpp"
#include "ribbon/polynomial.hpp"
#include "ribbon/ribbon_graph.hpp"
#include "ribbon/specializations.hpp"
#include "ribbon/verify.hpp"
