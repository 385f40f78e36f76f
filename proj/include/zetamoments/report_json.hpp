#pragma once

#include "zetamoments/json_io.hpp"
#include "zetamoments/large_values.hpp"
#include "zetamoments/lemma_audit.hpp"
#include "zetamoments/moments.hpp"
#include "zetamoments/zero_stats.hpp"
#include "zetamoments/zeros.hpp"

namespace zm {

Json complex_json(Complex z);

Json to_json(const CountAudit& r);
Json to_json(const GonekReport& r);
Json to_json(const MeanSquareReport& r);
Json to_json(const FSumReport& r);
Json to_json(const MomentReport& r);
Json to_json(const CauchyTransferReport& r);
Json to_json(const ContinuousMomentReport& r);
Json to_json(const VdParams& p);
Json to_json(const LargeValueHistogram& h);
Json to_json(const LemmaAuditTable& t);
Json to_json(const DifferenceAudit& d);

}  // namespace zm
