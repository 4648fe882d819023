#pragma once

#include <ostream>
#include <span>
#include <string>

#include "repeatscan/lr_query.hpp"
#include "repeatscan/types.hpp"

namespace repeatscan::cli {

// One LF-terminated line per position, tab separated:
//   leftmost: "k\tstart\tlength", or "k\t-1\t0" when no repeat covers k
//   all:      "k\tstart1,len1;start2,len2;...", or "k\t-1,0"

void write_leftmost(std::ostream& out, PositionRange range,
                    std::span<const LrAnswer> answers);
void write_all(std::ostream& out, PositionRange range,
               std::span<const LrAnswerSet> answers);

void write_answers(std::ostream& out, const PositionAnswers& answers);
std::string format_answers(const PositionAnswers& answers);

}  // namespace repeatscan::cli
