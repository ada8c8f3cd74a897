#pragma once

#include "scoreseq/approximation.hpp"
#include "scoreseq/blowup.hpp"
#include "scoreseq/errors.hpp"
#include "scoreseq/integer_realizer.hpp"
#include "scoreseq/json_io.hpp"
#include "scoreseq/model.hpp"
#include "scoreseq/oracle.hpp"
#include "scoreseq/rational.hpp"
