// severi: exact-arithmetic regularity bounds for families of nodal curves
// on smooth projective surfaces, driven from intersection-lattice models.
//
// Exit codes: 0 all hypotheses pass, 1 some hypothesis fails (report still
// printed), 2 invalid input or arguments.

#include <severi/criterion.hpp>
#include <severi/examples.hpp>
#include <severi/families.hpp>
#include <severi/lattice.hpp>
#include <severi/render.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace severi;

std::optional<BigInt> parse_delta_flag(const std::string& raw) {
    if (raw.empty()) return std::nullopt;
    BigInt d;
    try {
        d = BigInt(raw);
    } catch (const std::invalid_argument&) {
        throw input_error("--delta expects an integer, got '" + raw + "'");
    }
    if (d < 0) throw input_error("--delta must be non-negative");
    return d;
}

int report_exit_code(const RegularityReport& rep) { return rep.delta_max ? 0 : 1; }

int cmd_check(const std::string& input_path, const std::string& format,
              const std::string& delta_raw, bool no_signature_check) {
    std::ifstream in(input_path);
    if (!in) throw input_error("cannot read input file '" + input_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    CheckRequest req = parse_check_request(buf.str());
    if (no_signature_check) req.validate_signature = false;
    if (auto d = parse_delta_flag(delta_raw)) req.delta = std::move(*d);
    const ValidationOutcome validation =
        validate_lattice(req.surface.lattice, req.validate_signature);
    if (!validation.ok()) throw input_error(validation.violations.front());
    const RegularityReport rep = delta_max(req.surface, req.class_coeffs);
    std::optional<DeltaProbe> probe;
    if (req.delta) probe = make_delta_probe(rep, *req.delta);
    if (format == "text") {
        std::cout << render_report_text(req.surface, req.class_coeffs, rep, probe);
    } else if (format == "structured") {
        Json out{{"surface", to_json(req.surface)},
                 {"class", to_json(req.class_coeffs)},
                 {"report", to_json(rep)}};
        if (probe) out["delta_probe"] = to_json(*probe);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << report_csv_header << "\n"
                  << report_csv_row(req.surface.name, rep) << "\n";
    }
    return report_exit_code(rep);
}

int cmd_family(long d, long a, const std::string& format, const std::string& delta_raw) {
    const FamilyPoint fp = family_point(d, a);
    std::optional<DeltaProbe> probe;
    if (auto delta = parse_delta_flag(delta_raw)) probe = make_delta_probe(fp.report, *delta);
    if (format == "text") {
        std::cout << render_family_text(fp, probe);
    } else if (format == "structured") {
        Json out = to_json(fp);
        if (probe) out["delta_probe"] = to_json(*probe);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << render_scan_csv({fp});
    }
    return report_exit_code(fp.report);
}

int cmd_scan(long d_min, long d_max, long a_min, long a_max, long a_cap) {
    const std::vector<FamilyPoint> points = scan(d_min, d_max, a_min, a_max);
    std::cout << render_scan_csv(points, a_cap);
    return 0;
}

int cmd_examples(const std::string& format) {
    const auto& examples = builtin_examples();
    bool all_pass = true;
    std::vector<RegularityReport> reports;
    for (const auto& ex : examples) {
        reports.push_back(run_builtin(ex));
        const RegularityReport& rep = reports.back();
        const bool matches = rep.delta_max && (!ex.published.delta_max ||
                                               *rep.delta_max == *ex.published.delta_max);
        all_pass = all_pass && matches;
    }
    if (format == "text") {
        for (std::size_t i = 0; i < examples.size(); ++i) {
            std::cout << "=== example " << (i + 1) << " ===\n"
                      << render_report_text(examples[i].surface, examples[i].curve,
                                            reports[i])
                      << "\n";
        }
    } else if (format == "structured") {
        Json arr = Json::array();
        for (std::size_t i = 0; i < examples.size(); ++i)
            arr.push_back(Json{{"name", examples[i].surface.name},
                               {"surface", to_json(examples[i].surface)},
                               {"class", to_json(examples[i].curve)},
                               {"report", to_json(reports[i])}});
        std::cout << Json{{"examples", std::move(arr)}}.dump(2) << "\n";
    } else {
        std::cout << report_csv_header << "\n";
        for (std::size_t i = 0; i < examples.size(); ++i)
            std::cout << report_csv_row(examples[i].surface.name, reports[i]) << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "severi: exact regularity bounds for nodal curves on projective surfaces"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "structured", "csv"};

    auto* check = app.add_subcommand(
        "check", "evaluate the criterion for a surface model from a JSON file");
    std::string input_path;
    std::string check_format = "text";
    std::string check_delta;
    bool no_signature_check = false;
    check->add_option("--input", input_path, "JSON input file")->required();
    check->add_option("--format", check_format, "output format")
        ->check(CLI::IsMember(formats));
    check->add_option("--delta", check_delta, "probe a specific node count");
    check->add_flag("--no-signature-check", no_signature_check,
                    "skip the lattice signature validation");

    auto* family = app.add_subcommand(
        "family", "evaluate C = aH - L on the degree-d surface with a line");
    long fam_d = 0, fam_a = 0;
    std::string family_format = "text";
    std::string family_delta;
    family->add_option("--d", fam_d, "surface degree (>= 5)")->required();
    family->add_option("--a", fam_a, "class parameter (>= 1)")->required();
    family->add_option("--format", family_format, "output format")
        ->check(CLI::IsMember(formats));
    family->add_option("--delta", family_delta, "probe a specific node count");

    auto* scan_cmd = app.add_subcommand("scan", "grid scan over (d, a), CSV output");
    long scan_d = 0, scan_d_max = -1, scan_a = 0, scan_a_max = -1, scan_a_cap = 0;
    scan_cmd->add_option("--d", scan_d, "first degree")->required();
    scan_cmd->add_option("--d-max", scan_d_max, "last degree (default --d)");
    scan_cmd->add_option("--a", scan_a, "first class parameter")->required();
    scan_cmd->add_option("--a-max", scan_a_max, "last class parameter (default --a)");
    scan_cmd->add_option("--a-cap", scan_a_cap,
                         "cap for the minimal-a marker search (default 10*d)");

    auto* examples_cmd =
        app.add_subcommand("examples", "run the built-in reference examples");
    std::string examples_format = "text";
    examples_cmd->add_option("--format", examples_format, "output format")
        ->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check))
            return cmd_check(input_path, check_format, check_delta, no_signature_check);
        if (app.got_subcommand(family))
            return cmd_family(fam_d, fam_a, family_format, family_delta);
        if (app.got_subcommand(scan_cmd)) {
            if (!scan_cmd->count("--d-max")) scan_d_max = scan_d;
            if (!scan_cmd->count("--a-max")) scan_a_max = scan_a;
            return cmd_scan(scan_d, scan_d_max, scan_a, scan_a_max, scan_a_cap);
        }
        return cmd_examples(examples_format);
    } catch (const severi::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
