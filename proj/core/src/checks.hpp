#pragma once

#include <iqc/iqg.hpp>

#include <functional>
#include <string>
#include <vector>

namespace iqc::detail {

// Runs task(0..count-1) on up to thread_limit() workers; an exception becomes a failed result.
std::vector<CheckResult> run_parallel(std::size_t count, const std::function<CheckResult(std::size_t)>& task);
CheckResult compare(std::string label, const TorusElement& got, const TorusElement& want);
CheckResult holds(std::string label, bool ok, std::string witness = {});

}  // namespace iqc::detail
