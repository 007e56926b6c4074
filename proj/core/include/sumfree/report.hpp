#ifndef SUMFREE_REPORT_HPP
#define SUMFREE_REPORT_HPP

#include <string>

#include "sumfree/bounds.hpp"
#include "sumfree/sets.hpp"

namespace sumfree {

/// JSON with a fixed field order, two-space indent, trailing newline.
std::string to_json(const Report& r);
std::string to_json(const SweepSummary& s);
std::string to_json(const PipelineReport& p);
std::string to_json(const LinkReductionSummary& s);

/// Header line plus one row per record.
std::string to_csv(const Report& r);
/// One row per level followed by one row per recorded violation.
std::string to_csv(const SweepSummary& s);
std::string to_csv(const PipelineReport& p);

}  // namespace sumfree

#endif  // SUMFREE_REPORT_HPP
