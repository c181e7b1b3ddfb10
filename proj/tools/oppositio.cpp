// oppositio: batch front end for structure checking, theory tagging and
// debate-corpus validation.
//
// Exit codes: 0 success, 1 findings (violations or unsatisfiable),
// 2 input/parse error, 3 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "oppositio/analysis.hpp"
#include "oppositio/debate.hpp"
#include "oppositio/defeasible.hpp"
#include "oppositio/dsl.hpp"
#include "oppositio/opposition.hpp"

namespace {

using nlohmann::ordered_json;
using namespace oppositio;

struct CommandResult {
    std::string output;
    int exit_code = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* status_name(EdgeStatus s) {
    return s == EdgeStatus::Confirmed ? "confirmed" : "strengthened";
}

CommandResult cmd_structure_check(const std::string& path, const std::string& format) {
    const auto structure = parse_structure(read_file(path));
    const auto report = verify_structure(structure);

    std::ostringstream out;
    if (format == "json") {
        ordered_json j;
        j["structure"] = structure.name;
        j["judgments"] = structure.judgments().size();
        j["satisfiable"] = report.satisfiable;
        j["worlds"] = report.world_count;
        j["edges"] = ordered_json::array();
        std::size_t confirmed = 0;
        for (const auto& er : report.edges) {
            confirmed += er.status == EdgeStatus::Confirmed;
            j["edges"].push_back({{"edge", describe(er.edge)},
                                  {"status", status_name(er.status)},
                                  {"note", er.note}});
        }
        j["confirmed"] = confirmed;
        out << j.dump(2) << "\n";
    } else {
        out << "structure: " << structure.name << "\n";
        out << "judgments: " << structure.judgments().size() << "\n";
        out << "worlds: " << report.world_count << "\n";
        if (!report.satisfiable) {
            out << "unsatisfiable\n";
        } else {
            std::size_t confirmed = 0;
            for (const auto& er : report.edges) {
                confirmed += er.status == EdgeStatus::Confirmed;
                out << "edge " << describe(er.edge) << ": " << status_name(er.status);
                if (!er.note.empty()) out << " (" << er.note << ")";
                out << "\n";
            }
            out << "confirmed: " << confirmed << "/" << report.edges.size() << "\n";
        }
    }
    return {out.str(), report.all_confirmed() ? 0 : 1};
}

CommandResult cmd_structure_worlds(const std::string& path, const std::string& format) {
    const auto structure = parse_structure(read_file(path));
    const auto worlds = admissible_worlds(structure);
    const auto names = structure.sorted_judgments();

    std::ostringstream out;
    if (format == "json") {
        ordered_json j;
        j["structure"] = structure.name;
        j["worlds"] = ordered_json::array();
        for (const auto& w : worlds) {
            ordered_json world;
            for (const auto& n : names) world[n] = (w.get(n) == Truth::True);
            j["worlds"].push_back(std::move(world));
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& w : worlds) out << format_world(names, w) << "\n";
    }
    return {out.str(), worlds.empty() ? 1 : 0};
}

CommandResult cmd_theory_tags(const std::string& path, const std::string& format) {
    const auto theory = parse_theory(read_file(path));
    for (const auto& [a, b] : theory.inert_superiority())
        std::cerr << "warning: sup " << a << " > " << b
                  << " pairs rules with non-complementary heads; ignored by inference\n";

    const auto report = tag_report(theory);
    std::vector<std::pair<Literal, std::vector<Violation>>> hexagon_violations;
    for (const auto& [lit, tags] : report) {
        auto v = check_tags_against_structure(tags);
        if (!v.empty()) hexagon_violations.push_back({lit, std::move(v)});
    }

    std::ostringstream out;
    if (format == "json") {
        ordered_json j;
        j["literals"] = ordered_json::array();
        for (const auto& [lit, tags] : report)
            j["literals"].push_back({{"literal", lit.str()},
                                     {"definite", sign_of(tags.definite)},
                                     {"defeasible", sign_of(tags.defeasible)},
                                     {"ambiguity", sign_of(tags.ambiguity)}});
        j["hexagon_check"] = {{"ok", hexagon_violations.empty()},
                              {"violations", ordered_json::array()}};
        for (const auto& [lit, vs] : hexagon_violations)
            for (const auto& v : vs)
                j["hexagon_check"]["violations"].push_back(
                    {{"literal", lit.str()}, {"violation", describe(v)}});
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [lit, tags] : report)
            out << lit.str() << ": " << sign_of(tags.definite) << "Δ "
                << sign_of(tags.defeasible) << "δ " << sign_of(tags.ambiguity)
                << "δ_ap\n";
        if (hexagon_violations.empty()) {
            out << "hexagon check: ok (" << report.size() << " literals)\n";
        } else {
            for (const auto& [lit, vs] : hexagon_violations)
                for (const auto& v : vs)
                    out << "hexagon check: " << lit.str() << ": " << describe(v) << "\n";
        }
    }
    return {out.str(), 0};
}

ordered_json violation_json(const Violation& v) {
    return {{"kind", to_string(v.edge.kind)},
            {"from", v.edge.from},
            {"to", v.edge.to},
            {"reason", v.reason}};
}

CommandResult cmd_debate_validate(const std::string& dir, const std::string& format) {
    const Debate debate = load_debate(dir);
    const auto records = validate_debate(debate);

    std::size_t well_formed = 0, with_violations = 0;
    for (const auto& r : records) {
        well_formed += r.well_formed;
        with_violations += !r.violations.empty();
    }

    std::ostringstream out;
    if (format == "json") {
        ordered_json j;
        j["records"] = ordered_json::array();
        for (const auto& r : records) {
            ordered_json rec;
            rec["id"] = r.argument_id;
            rec["well_formed"] = r.well_formed;
            rec["violations"] = ordered_json::array();
            for (const auto& v : r.violations) rec["violations"].push_back(violation_json(v));
            rec["completable"] = r.completable;
            j["records"].push_back(std::move(rec));
        }
        j["total"] = records.size();
        j["well_formed"] = well_formed;
        j["arguments_with_violations"] = with_violations;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : records) {
            out << r.argument_id << ": " << (r.well_formed ? "well-formed" : "not well-formed");
            for (const auto& v : r.violations) out << "; violates " << describe(v.edge);
            if (!r.completable) out << "; not completable";
            out << "\n";
        }
        out << "well-formed: " << well_formed << "/" << records.size() << "\n";
        out << "arguments with violations: " << with_violations << "\n";
    }
    return {out.str(), with_violations > 0 ? 1 : 0};
}

CommandResult cmd_debate_report(const std::string& dir, const std::string& format) {
    const Debate debate = load_debate(dir);
    const auto records = validate_debate(debate);
    std::size_t well_formed = 0;
    for (const auto& r : records) well_formed += r.well_formed;

    const auto rep = repartition(debate);
    const auto comp = compliance(debate);
    const auto genres = genre_histogram(debate);

    std::ostringstream out;
    if (format == "json") {
        ordered_json j;
        j["subject"] = debate.subject;
        j["problem"] = debate.problem;
        j["total_arguments"] = rep.total_arguments;
        j["well_formed"] = well_formed;
        j["repartition"] = ordered_json::object();
        for (const auto& [name, count] : rep.counts) j["repartition"][name] = count;
        j["compliance"] = ordered_json::array();
        for (const auto& ec : comp.edges)
            j["compliance"].push_back({{"from", ec.edge.from},
                                       {"to", ec.edge.to},
                                       {"satisfied", ec.satisfied},
                                       {"violated", ec.violated},
                                       {"not_applicable", ec.not_applicable}});
        j["genres"] = ordered_json::object();
        for (const auto& [genre, count] : genres) j["genres"][to_string(genre)] = count;
        out << j.dump(2) << "\n";
    } else {
        out << "subject: " << debate.subject << "\n";
        out << "problem: " << debate.problem << "\n";
        out << "arguments: " << rep.total_arguments << " (" << well_formed
            << " well-formed)\n";
        out << "repartition:\n";
        for (const auto& [name, count] : rep.counts)
            out << "  " << name << ": " << count << "\n";
        out << "compliance:\n";
        for (const auto& ec : comp.edges)
            out << "  " << ec.edge.from << " -> " << ec.edge.to << ": satisfied "
                << ec.satisfied << ", violated " << ec.violated << ", n/a "
                << ec.not_applicable << "\n";
        if (!genres.empty()) {
            out << "genres:\n";
            for (const auto& [genre, count] : genres)
                out << "  " << to_string(genre) << ": " << count << "\n";
        }
    }
    return {out.str(), 0};
}

CommandResult cmd_debate_summary(const std::string& dir) {
    return {summarize(load_debate(dir)), 0};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"opposition structures and defeasible proof tags for debate corpora"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    std::string structure_path, theory_path, debate_dir;

    auto* structure = app.add_subcommand("structure", "opposition structure operations");
    structure->require_subcommand(1);
    structure->fallthrough();
    auto* check = structure->add_subcommand("check", "verify a structure's coherence");
    check->fallthrough();
    check->add_option("path", structure_path, ".nop structure file")->required();
    auto* worlds = structure->add_subcommand("worlds", "list admissible worlds");
    worlds->fallthrough();
    worlds->add_option("path", structure_path, ".nop structure file")->required();

    auto* theory = app.add_subcommand("theory", "defeasible theory operations");
    theory->require_subcommand(1);
    theory->fallthrough();
    auto* tags = theory->add_subcommand("tags", "compute the six proof tags per literal");
    tags->fallthrough();
    tags->add_option("path", theory_path, ".dlt theory file")->required();

    auto* debate = app.add_subcommand("debate", "debate corpus operations");
    debate->require_subcommand(1);
    debate->fallthrough();
    auto* validate = debate->add_subcommand("validate", "validate every argument");
    validate->fallthrough();
    validate->add_option("dir", debate_dir, "debate directory")->required();
    auto* report = debate->add_subcommand("report", "repartition, compliance and genres");
    report->fallthrough();
    report->add_option("dir", debate_dir, "debate directory")->required();
    auto* summary = debate->add_subcommand("summary", "plain-text debate summary");
    summary->fallthrough();
    summary->add_option("dir", debate_dir, "debate directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        CommandResult result;
        if (*check) result = cmd_structure_check(structure_path, format);
        else if (*worlds) result = cmd_structure_worlds(structure_path, format);
        else if (*tags) result = cmd_theory_tags(theory_path, format);
        else if (*validate) result = cmd_debate_validate(debate_dir, format);
        else if (*report) result = cmd_debate_report(debate_dir, format);
        else result = cmd_debate_summary(debate_dir);

        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write '" << out_path << "'\n";
                return 2;
            }
            out << result.output;
        } else {
            std::cout << result.output;
        }
        return result.exit_code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
