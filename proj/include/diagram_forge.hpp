#pragma once

#include "diagram_forge/builtins.hpp"
#include "diagram_forge/dot.hpp"
#include "diagram_forge/emit.hpp"
#include "diagram_forge/error.hpp"
#include "diagram_forge/fincat.hpp"
#include "diagram_forge/inverse.hpp"
#include "diagram_forge/nerve.hpp"
#include "diagram_forge/reedy.hpp"
#include "diagram_forge/render.hpp"
#include "diagram_forge/report.hpp"
#include "diagram_forge/schema.hpp"
#include "diagram_forge/simplex.hpp"
#include "diagram_forge/spec_io.hpp"
#include "diagram_forge/strictify.hpp"
