#pragma once

#include "cortex/decision.hpp"
#include "cortex/error.hpp"
#include "cortex/evaluation.hpp"
#include "cortex/lexmatrix.hpp"
#include "cortex/metrics.hpp"
#include "cortex/qa.hpp"
#include "cortex/resources.hpp"
#include "cortex/retrieval.hpp"
#include "cortex/stemmer.hpp"
#include "cortex/summarizer.hpp"
#include "cortex/text_pipeline.hpp"
#include "cortex/utf8.hpp"
