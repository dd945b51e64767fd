#pragma once

#include "capcheck/caption.hpp"
#include "capcheck/chart_model.hpp"
#include "capcheck/check.hpp"
#include "capcheck/date.hpp"
#include "capcheck/error.hpp"
#include "capcheck/eval.hpp"
#include "capcheck/grounding.hpp"
#include "capcheck/ingest.hpp"
#include "capcheck/json_io.hpp"
#include "capcheck/lexicon.hpp"
#include "capcheck/prominence.hpp"
#include "capcheck/text.hpp"
#include "capcheck/time_refs.hpp"
