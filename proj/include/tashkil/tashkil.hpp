#pragma once

// Umbrella header for the whole library.

#include "tashkil/analyzer.hpp"
#include "tashkil/buckwalter.hpp"
#include "tashkil/bundle.hpp"
#include "tashkil/decoder.hpp"
#include "tashkil/diacritics.hpp"
#include "tashkil/errors.hpp"
#include "tashkil/eval.hpp"
#include "tashkil/hmm.hpp"
#include "tashkil/lexicon.hpp"
#include "tashkil/text.hpp"
#include "tashkil/train.hpp"
#include "tashkil/utf8.hpp"
#include "tashkil/viterbi.hpp"
#include "tashkil/words.hpp"
