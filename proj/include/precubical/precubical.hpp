#pragma once

#include "cube_word.hpp"
#include "precubical_set.hpp"
#include "constructions.hpp"
#include "generators.hpp"
#include "flow.hpp"
#include "homology.hpp"
#include "globular.hpp"
#include "io.hpp"
