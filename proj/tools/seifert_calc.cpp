// seifert-calc: invariants of Seifert G_m-bundles over declared bases.
//
// Exit codes: 0 success, 1 input or structural fault, 2 mathematical
// validation failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seifert/errors.hpp"
#include "seifert/io/report.hpp"

namespace {

using seifert::io::Json;

int emit(const Json& report, bool as_json) {
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        seifert::io::render_human(std::cout, report);
    return 0;
}

seifert::local_model::QuotientPresentation chart_from_flags(long m, const std::string& weights_csv,
                                                            long r) {
    std::vector<seifert::Int> weights;
    std::stringstream ss(weights_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw seifert::ParseError("empty entry in --weights");
        try {
            weights.emplace_back(item);
        } catch (const std::invalid_argument&) {
            throw seifert::ParseError("--weights entries must be integers");
        }
    }
    if (weights.empty()) throw seifert::ParseError("--weights must list at least one weight");
    return {seifert::Int(r), seifert::local_model::CyclicChart(seifert::Int(m), weights)};
}

seifert::exact::IntMatrix matrix_from_arg(const std::string& file, const std::string& inline_rows) {
    if (!inline_rows.empty()) {
        // rows separated by ';', entries by ','
        std::vector<std::vector<seifert::Int>> rows;
        std::stringstream ss(inline_rows);
        std::string row;
        std::size_t cols = 0;
        while (std::getline(ss, row, ';')) {
            std::vector<seifert::Int> r;
            std::stringstream rs(row);
            std::string item;
            while (std::getline(rs, item, ',')) {
                try {
                    r.emplace_back(item);
                } catch (const std::invalid_argument&) {
                    throw seifert::ParseError("--matrix entries must be integers");
                }
            }
            if (rows.empty())
                cols = r.size();
            else if (r.size() != cols)
                throw seifert::ParseError("--matrix rows must have equal length");
            rows.push_back(std::move(r));
        }
        return seifert::exact::IntMatrix::from_rows(rows, cols);
    }
    Json j;
    try {
        if (file == "-") {
            j = Json::parse(std::cin);
        } else {
            std::ifstream in(file);
            if (!in) throw seifert::ParseError("cannot open '" + file + "'");
            j = Json::parse(in);
        }
    } catch (const nlohmann::json::parse_error& e) {
        throw seifert::ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("matrix"))
        throw seifert::ParseError("snf input must be {\"matrix\": [[...], ...]}");
    const Json& jm = j["matrix"];
    if (!jm.is_array()) throw seifert::ParseError("matrix must be an array of rows");
    std::vector<std::vector<seifert::Int>> rows;
    std::size_t cols = 0;
    for (const Json& jr : jm) {
        std::vector<seifert::Int> r = seifert::io::int_vector_from_json(jr, "matrix");
        if (rows.empty())
            cols = r.size();
        else if (r.size() != cols)
            throw seifert::ParseError("matrix rows must have equal length");
        rows.push_back(std::move(r));
    }
    return seifert::exact::IntMatrix::from_rows(rows, cols);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of Seifert G_m-bundles over normal varieties"};
    app.set_help_all_flag("--help-all");
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the machine-readable report");

    std::string file = "-";
    auto add_file = [&file](CLI::App* cmd) {
        cmd->add_option("file", file, "input document (\"-\" for stdin)")->required();
    };

    CLI::App* cmd_validate = app.add_subcommand("validate", "check Seifert data for validity");
    add_file(cmd_validate);
    CLI::App* cmd_analyze = app.add_subcommand("analyze", "compute all invariants");
    add_file(cmd_analyze);
    CLI::App* cmd_h1 = app.add_subcommand("h1", "first homology of the total space");
    add_file(cmd_h1);
    CLI::App* cmd_h1orb = app.add_subcommand("h1orb", "abelian orbifold fundamental group");
    add_file(cmd_h1orb);
    CLI::App* cmd_quotient = app.add_subcommand("quotient", "document for the quotient by mu_M");
    add_file(cmd_quotient);
    long quotient_m = 1;
    cmd_quotient->add_option("--m", quotient_m, "order of the subgroup mu_M")->required();

    CLI::App* cmd_local = app.add_subcommand("local", "etale-local chart computations");
    cmd_local->require_subcommand(1);
    long local_m = 1;
    long local_r = 0;
    std::string local_weights;
    auto add_chart_flags = [&](CLI::App* cmd) {
        cmd->add_option("--m", local_m, "order M of the cyclic group")->required();
        cmd->add_option("--weights", local_weights, "comma-separated weights a_1,...,a_n")
            ->required();
        cmd->add_option("--r", local_r, "fiber weight r")->required();
    };
    CLI::App* cmd_dict = cmd_local->add_subcommand(
        "dict", "Seifert data of G_m x A^n / mu_M(r, a_1, ..., a_n)");
    add_chart_flags(cmd_dict);
    CLI::App* cmd_smooth = cmd_local->add_subcommand("smooth", "total-space smoothness");
    add_chart_flags(cmd_smooth);
    CLI::App* cmd_mult = cmd_local->add_subcommand("mult", "fiber multiplicity at the chart center");
    add_chart_flags(cmd_mult);

    CLI::App* cmd_snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    std::string snf_file = "-";
    std::string snf_inline;
    cmd_snf->add_option("file", snf_file, "JSON input {\"matrix\": [[...]]} (\"-\" for stdin)");
    cmd_snf->add_option("--matrix", snf_inline, "inline matrix, rows split by ';', entries by ','");
    bool snf_transforms = false;
    cmd_snf->add_flag("--transforms", snf_transforms, "include U, S, V in the report");

    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_validate->parsed()) {
            seifert::io::InputDocument doc = seifert::io::load_document(file);
            seifert::ValidationReport report = seifert::validate(*doc.seifert);
            emit(seifert::io::validation_report_json(*doc.seifert, report), as_json);
            return report.ok() ? 0 : 2;
        }
        if (cmd_analyze->parsed()) {
            seifert::io::InputDocument doc = seifert::io::load_document(file);
            if (!seifert::validate(*doc.seifert).ok()) {
                emit(seifert::io::validation_report_json(*doc.seifert,
                                                         seifert::validate(*doc.seifert)),
                     as_json);
                return 2;
            }
            return emit(seifert::io::analyze_report_json(doc), as_json);
        }
        if (cmd_h1->parsed() || cmd_h1orb->parsed()) {
            seifert::io::InputDocument doc = seifert::io::load_document(file);
            return emit(seifert::io::h1_report_json(doc, cmd_h1orb->parsed()), as_json);
        }
        if (cmd_quotient->parsed()) {
            seifert::io::InputDocument doc = seifert::io::load_document(file);
            if (quotient_m < 1) throw seifert::StructuralFault("--m must be >= 1");
            seifert::io::InputDocument out =
                seifert::io::quotient_document(doc, seifert::Int(quotient_m));
            std::cout << seifert::io::serialize_document(out).dump(2) << "\n";
            return 0;
        }
        if (cmd_local->parsed()) {
            seifert::local_model::QuotientPresentation qp =
                chart_from_flags(local_m, local_weights, local_r);
            if (cmd_dict->parsed()) return emit(seifert::io::local_dict_report_json(qp), as_json);
            if (cmd_smooth->parsed())
                return emit(seifert::io::local_smooth_report_json(qp), as_json);
            return emit(seifert::io::local_mult_report_json(qp), as_json);
        }
        if (cmd_snf->parsed()) {
            seifert::exact::IntMatrix a = matrix_from_arg(snf_file, snf_inline);
            return emit(seifert::io::snf_report_json(a, snf_transforms), as_json);
        }
    } catch (const seifert::ValidationRequired& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const seifert::PreconditionFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const seifert::HypothesisNotMet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const seifert::AmbiguityPossible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
