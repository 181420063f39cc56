#ifndef OMLKIT_REPORT_HPP
#define OMLKIT_REPORT_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "omlkit/io.hpp"
#include "omlkit/search.hpp"

namespace omlkit {

struct AnalyzeOptions {
    bool center = false;
    bool blocks = false;
    bool diamond = false;
    bool ks = false;
    bool mks = false; ///< implies ks
    std::optional<std::string> cons;
    bool timings = false; ///< wall-clock fields make the report non-reproducible
    SearchOptions search;
};

struct AnalyzeResult {
    nlohmann::ordered_json report;
    /// 0 ok, 1 semantic failure, 2 format error, 3 budget exceeded
    int exit_code = 0;
};

/// Runs the requested analyses. Budget exhaustion yields a partial report
/// with exit code 3 rather than an exception.
AnalyzeResult analyze(const LoadedInput &input, const std::string &source, const AnalyzeOptions &options);

/// Human-readable rendering of an analyze report.
std::string render_text(const nlohmann::ordered_json &report);

} // namespace omlkit

#endif // OMLKIT_REPORT_HPP
