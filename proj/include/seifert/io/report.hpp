#pragma once

#include <ostream>
#include <string>

#include "seifert/io/document.hpp"

namespace seifert::io {

// Reports are built as ordered JSON so the machine output is the
// document itself and the human rendering walks the same data;
// identical input bytes produce identical output bytes in both modes.

Json validation_report_json(const SeifertData& sd, const ValidationReport& report);
Json analyze_report_json(const InputDocument& doc);
Json h1_report_json(const InputDocument& doc, bool orbifold);
Json local_dict_report_json(const local_model::QuotientPresentation& qp);
Json local_smooth_report_json(const local_model::QuotientPresentation& qp);
Json local_mult_report_json(const local_model::QuotientPresentation& qp);
Json snf_report_json(const exact::IntMatrix& a, bool include_transforms);

void render_human(std::ostream& os, const Json& report, int indent = 0);

}  // namespace seifert::io
