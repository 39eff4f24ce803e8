#pragma once

#include "classify.hpp"
#include "constructions.hpp"
#include "envelope.hpp"
#include "error.hpp"
#include "fingroup.hpp"
#include "freealg.hpp"
#include "ga.hpp"
#include "io.hpp"
#include "permutation.hpp"
#include "quandle.hpp"
#include "smith.hpp"
#include "word.hpp"
