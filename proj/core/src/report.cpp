#include "scenval/report.hpp"

#include <algorithm>

namespace scenval {

ValidationReport validate_pair(const PointSet& e, const PointSet& g,
                               const MeasureParams& params, ExpectationMode mode,
                               unsigned threads) {
    params.validate_for(std::min(e.size(), g.size()));

    const NncResult coincidence = nnc(e, g, params.k, mode, threads);
    const MrResult memorizing = memorizing_ratio(e, g, params.rho, threads);

    ValidationReport report;
    report.nnc = coincidence.nnc;
    report.t1 = coincidence.t1;
    report.t2 = coincidence.t2;
    report.expected_t = coincidence.expected_t;
    report.mode = mode;
    report.mr = memorizing.mr;
    report.mr_limit = memorizing.mr_limit;
    report.memorized_count = static_cast<std::size_t>(
        std::count(memorizing.memorized_flags.begin(),
                   memorizing.memorized_flags.end(), true));
    report.m = e.size();
    report.d = e.dim();
    report.k = params.k;
    report.rho = params.rho;
    report.tie_count = coincidence.tie_count;
    report.methodology = {
        "nnc: share of pooled k-nearest neighbors from the own sample, centered "
        "at the selected expectation; near 0 when both samples share one "
        "distribution",
        "mr: share of empirical points with a generated point strictly inside "
        "rho times their within-sample nearest-neighbor distance (half-open "
        "interval, so duplicated empirical points never count as memorized)",
        "distance ties are broken toward the smaller point index; tie_count is "
        "the number of equal-distance candidates that the rule excluded",
        "reference values assume independent draws from one continuous "
        "distribution; mr_limit additionally assumes m large",
    };
    return report;
}

}  // namespace scenval
