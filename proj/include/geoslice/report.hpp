#pragma once

#include <string>

#include "json.hpp"

#include "geoslice/segments.hpp"
#include "geoslice/verify.hpp"

namespace geoslice {

using json = nlohmann::ordered_json;

// CSV with columns k,size,s1,s2,s3; the partial columns stay empty when no
// partial profile is supplied.
std::string slice_report_csv(const SliceProfile& profile,
                             const PartialProfile* partials = nullptr);

json slice_report_json(const SliceProfile& profile,
                       const PartialProfile* partials = nullptr);

json check_result_json(const CheckResult& result);

// The full verify report; `checks` in the given order, aggregate verdict.
json verify_report_json(const CheckConfig& cfg,
                        const std::vector<CheckResult>& checks);

std::string verify_report_text(const std::vector<CheckResult>& checks);

json window_json(const Window& w);
Window window_from_json(const json& j);

}  // namespace geoslice
