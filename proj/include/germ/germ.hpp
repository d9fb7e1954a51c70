#pragma once

#include "germ/analyze.hpp"
#include "germ/elimination.hpp"
#include "germ/format.hpp"
#include "germ/parse.hpp"
#include "germ/scan.hpp"
