#pragma once

#include "knotlab/knotlab.hpp"
#include "knotlab/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace knotlab::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { success = 0, domain_error = 1, usage_error = 2 };

/// Raised for bad invocations: missing or conflicting inputs, unreadable
/// files, malformed environment settings.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Exactly one of the inline value or the file path must be given.
inline std::string pick_input(const std::string& inline_value, const std::string& path, const char* what) {
    const bool has_inline = !inline_value.empty();
    const bool has_path = !path.empty();
    if (has_inline == has_path) {
        throw UsageError(std::string("give exactly one of --") + what + " and --" + what + "-file");
    }
    return has_inline ? inline_value : read_file(path);
}

/// KNOTLAB_CROSSING_CAP can only raise the default cap.
inline std::size_t crossing_cap() {
    const std::size_t fallback = BracketOptions{}.crossing_cap;
    const char* raw = std::getenv("KNOTLAB_CROSSING_CAP");
    if (raw == nullptr || *raw == '\0') return fallback;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(raw, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || raw[used] != '\0') throw UsageError(std::string("KNOTLAB_CROSSING_CAP is not a number: ") + raw);
    return std::max<std::size_t>(fallback, static_cast<std::size_t>(v));
}

inline Json certificate_json(const std::optional<CongruenceCertificate>& c) {
    return c ? Json(c->to_string()) : Json(nullptr);
}

inline std::optional<LaurentPoly> paper_jones_for(const LambdaSpec& s) {
    for (const auto& e : paper_data::jones_values) {
        if (e.spec == s) return LaurentPoly::parse(e.value);
    }
    return std::nullopt;
}

inline std::optional<IntMatrix> paper_form_for(const LambdaSpec& s) {
    for (const auto& e : paper_data::seifert_forms) {
        if (e.spec == s) return IntMatrix::parse(e.matrix);
    }
    return std::nullopt;
}

inline Json report_line_json(const ReportLine& l) {
    Json j;
    j["status"] = to_string(l.status);
    j["section"] = l.section;
    j["item"] = l.item;
    j["expected"] = l.expected;
    j["computed"] = l.computed;
    j["note"] = l.note;
    return j;
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Knot invariants, Seifert forms and S-equivalence certificates", "knotlab"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    bool json = false;
    std::string pd, pd_file, seifert, seifert_file, band_name = "first", emit = "jones", method = "frontier";
    std::int64_t ell = 0, n = 0, m = 0, p = 3, oracle_bound = 0;
    bool paper = false;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit a JSON object instead of text"); };
    auto add_seifert = [&](CLI::App* sub) {
        sub->add_option("--seifert", seifert, "Seifert matrix, e.g. \"[[0,2],[1,0]]\"");
        sub->add_option("--seifert-file", seifert_file, "File with one matrix row per line");
    };

    CLI::App* jones_cmd = app.add_subcommand("jones", "Jones polynomial of a PD code");
    jones_cmd->add_option("--pd", pd, "PD code, e.g. \"X[4,2,5,1] X[2,6,3,5] X[6,4,1,3]\"");
    jones_cmd->add_option("--pd-file", pd_file, "File holding a PD code");
    jones_cmd->add_option("--method", method, "State-sum method")->check(CLI::IsMember({"frontier", "enumerate"}));
    add_json(jones_cmd);

    CLI::App* alexander_cmd = app.add_subcommand("alexander", "Alexander polynomial of a Seifert matrix");
    add_seifert(alexander_cmd);
    add_json(alexander_cmd);

    CLI::App* signature_cmd = app.add_subcommand("signature", "Signature of a Seifert matrix");
    add_seifert(signature_cmd);
    add_json(signature_cmd);

    CLI::App* sequiv_cmd = app.add_subcommand("sequiv", "Decide first S-equivalence after band twisting");
    add_seifert(sequiv_cmd);
    sequiv_cmd->add_option("--ell", ell, "Signed number of full twists")->required();
    sequiv_cmd->add_option("--band", band_name, "Band receiving the twists")->check(CLI::IsMember({"first", "second"}));
    sequiv_cmd->add_option("--oracle-bound", oracle_bound, "Also run the brute-force congruence search")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{64}));
    add_json(sequiv_cmd);

    CLI::App* lambda_cmd = app.add_subcommand("lambda", "Compile a member of the two-band family");
    lambda_cmd->add_option("--n", n, "Half-twists on the first band (even)")->required();
    lambda_cmd->add_option("--m", m, "Half-twists on the second band (even)")->required();
    lambda_cmd->add_option("--p", p, "Signed double crossings (odd, |p| >= 3)")->required();
    lambda_cmd->add_option("--emit", emit, "What to print")
        ->check(CLI::IsMember({"seifert", "pd", "jones", "alexander"}));
    add_json(lambda_cmd);

    CLI::App* report_cmd = app.add_subcommand("report", "Check the built-in reference values");
    report_cmd->add_flag("--paper", paper, "Compare against the published values")->required();
    add_json(report_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    Json doc;
    Json input = Json::object();
    Json result;
    Json paper_check = nullptr;
    std::string text;
    int status = success;

    try {
        BracketOptions bracket;
        bracket.crossing_cap = detail::crossing_cap();

        if (jones_cmd->parsed()) {
            doc["command"] = "jones";
            const std::string code = detail::pick_input(pd, pd_file, "pd");
            input["pd"] = code;
            input["method"] = method;
            bracket.method = method == "enumerate" ? BracketMethod::enumerate : BracketMethod::frontier;
            const PlanarDiagram d = PlanarDiagram::parse(code);
            const LaurentPoly v = jones_t(d, bracket);
            result["jones"] = v.to_string();
            result["crossings"] = d.crossing_count();
            result["writhe"] = writhe(d);
            text = v.to_string() + "\n";
        } else if (alexander_cmd->parsed() || signature_cmd->parsed()) {
            const bool alex = alexander_cmd->parsed();
            doc["command"] = alex ? "alexander" : "signature";
            const SeifertMatrix s = SeifertMatrix::parse(detail::pick_input(seifert, seifert_file, "seifert"));
            input["seifert"] = s.to_string();
            if (alex) {
                const LaurentPoly a = alexander(s);
                result["alexander"] = a.to_string();
                text = a.to_string() + "\n";
            } else {
                const int sig = signature(s);
                result["signature"] = sig;
                text = std::to_string(sig) + "\n";
            }
        } else if (sequiv_cmd->parsed()) {
            doc["command"] = "sequiv";
            const SeifertMatrix s = SeifertMatrix::parse(detail::pick_input(seifert, seifert_file, "seifert"));
            const TwistParams tp{ell, band_name == "second" ? Band::second : Band::first};
            input["seifert"] = s.to_string();
            input["ell"] = ell;
            input["band"] = band_name;
            const SEquivReport rep = first_sequiv_certificate(s, tp);
            result["decision"] = to_string(rep.decision);
            result["reason"] = rep.reason;
            result["twisted"] = rep.twisted.to_string();
            result["certificate"] = detail::certificate_json(rep.certificate);
            result["implies_s_equivalent"] = rep.implies_s_equivalent();
            if (rep.certificate) {
                text = "first-S-equivalent: T = " + rep.certificate->to_string() + " (" + rep.reason + ")\n";
            } else {
                text = "not first-S-equivalent: " + rep.reason + "\n";
            }
            text += "twisted form: " + rep.twisted.to_string() + "\n";
            if (oracle_bound > 0) {
                input["oracle_bound"] = oracle_bound;
                const auto found = brute_force_congruence(s, rep.twisted, oracle_bound);
                result["oracle_certificate"] = detail::certificate_json(found);
                text += "oracle (bound " + std::to_string(oracle_bound) + "): " +
                        (found ? "T = " + found->to_string() : std::string("no congruence found")) + "\n";
            }
        } else if (lambda_cmd->parsed()) {
            doc["command"] = "lambda";
            const LambdaSpec spec = LambdaSpec::make(n, m, p);
            input["n"] = n;
            input["m"] = m;
            input["p"] = p;
            input["emit"] = emit;
            std::string value;
            std::optional<bool> agrees;
            if (emit == "seifert") {
                const SeifertMatrix s = lambda_seifert(spec);
                value = s.to_string();
                if (auto known = detail::paper_form_for(spec)) agrees = *known == s.matrix();
            } else if (emit == "alexander") {
                value = alexander(lambda_seifert(spec)).to_string();
            } else {
                const PlanarDiagram d = lambda_diagram(spec, bracket.crossing_cap);
                if (emit == "pd") {
                    value = d.to_string();
                } else {
                    const LaurentPoly v = jones_t(d, bracket);
                    value = v.to_string();
                    if (auto known = detail::paper_jones_for(spec)) agrees = *known == v;
                }
            }
            result[emit] = value;
            if (agrees) paper_check = *agrees ? "MATCH" : "MISMATCH";
            text = value + "\n";
        } else if (report_cmd->parsed()) {
            doc["command"] = "report";
            input["paper"] = paper;
            const PaperReport rep = paper_report();
            Json lines = Json::array();
            for (const auto& l : rep.lines) lines.push_back(detail::report_line_json(l));
            result["lines"] = lines;
            paper_check = rep.ok() ? "MATCH" : "MISMATCH";
            text = format_report(rep);
            status = rep.ok() ? success : domain_error;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return domain_error;
    }

    if (json) {
        doc["input"] = input;
        doc["result"] = result;
        doc["paper_check"] = paper_check;
        out << doc.dump(2) << "\n";
    } else {
        out << text;
    }
    return status;
}

}  // namespace knotlab::cli
