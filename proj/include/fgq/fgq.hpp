#pragma once

#include "fgq/word.hpp"
#include "fgq/endo.hpp"
#include "fgq/nil2.hpp"
#include "fgq/report.hpp"
#include "fgq/suciu.hpp"
#include "fgq/quandle.hpp"
#include "fgq/expr.hpp"
#include "fgq/io.hpp"
#include "fgq/random_words.hpp"
