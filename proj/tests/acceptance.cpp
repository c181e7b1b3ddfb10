// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   1  classical square: 3 worlds, all 6 edges confirmed, < 1 s
//   2  modality hexagon: 4 worlds; 1000 random theories land on it, < 30 s
//   3  penguin theory golden tags, engine and oracle
//   4  oracle equivalence for all three tag computations
//   5  default intermed structure: 5 of 8 level-total rows admissible
//   6  justification genre table, all 8 rows
//   7  synthetic corpus: validate counts and byte-exact golden reports, < 5 s
//   8  parser robustness: round-trips and 10k-file fuzzing

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oppositio/analysis.hpp"
#include "oppositio/debate.hpp"
#include "oppositio/defeasible.hpp"
#include "oppositio/dsl.hpp"
#include "oppositio/opposition.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace oppositio;
using Clock = std::chrono::steady_clock;

namespace {

int g_failed_criteria = 0;
std::vector<std::string> g_notes;

#define EXPECT(cond, what)                                    \
    do {                                                      \
        if (!(cond)) g_notes.push_back(what);                 \
    } while (0)

void finish(int number, const std::string& title, Clock::time_point started,
            double budget_seconds) {
    const double elapsed =
        std::chrono::duration<double>(Clock::now() - started).count();
    if (elapsed > budget_seconds)
        g_notes.push_back("over time budget: " + std::to_string(elapsed) + "s > " +
                          std::to_string(budget_seconds) + "s");
    if (g_notes.empty()) {
        std::printf("[PASS] %d. %s (%.2fs)\n", number, title.c_str(), elapsed);
    } else {
        ++g_failed_criteria;
        std::printf("[FAIL] %d. %s (%.2fs)\n", number, title.c_str(), elapsed);
        for (const auto& n : g_notes) std::printf("       - %s\n", n.c_str());
    }
    g_notes.clear();
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(OPPOSITIO_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string kData = OPPOSITIO_DATA_DIR;
const std::string kGolden = OPPOSITIO_GOLDEN_DIR;

// ---------------------------------------------------------------------

void criterion_1_square() {
    const auto started = Clock::now();
    const auto r = run_cli("structure check " + kData + "/structures/classical-square.nop");
    EXPECT(r.exit_code == 0, "exit code " + std::to_string(r.exit_code) + ", wanted 0");
    EXPECT(r.out.find("worlds: 3") != std::string::npos, "did not report 3 worlds");
    EXPECT(r.out.find("confirmed: 6/6") != std::string::npos,
           "did not confirm all 6 edges");
    finish(1, "classical square: 3 worlds, 6 edges confirmed", started, 1.0);
}

bool hexagon_world_of(const TagVector& tags,
                      const std::vector<JudgmentAssignment>& worlds) {
    JudgmentAssignment a;
    auto place = [&](TagValue v, const std::string& family) {
        if (v == TagValue::Plus) a.set(family + ".plus", Truth::True);
        if (v == TagValue::Minus) a.set(family + ".minus", Truth::True);
    };
    place(tags.definite, "definite");
    place(tags.defeasible, "defeasible");
    place(tags.ambiguity, "ambiguity");
    return completable(worlds, a);
}

std::vector<DefeasibleTheory> random_theories() {
    std::mt19937 rng(777);
    std::vector<DefeasibleTheory> theories;
    theories.reserve(1000);
    for (int i = 0; i < 1000; ++i) theories.push_back(gen::random_theory(rng));
    return theories;
}

void criterion_2_hexagon(const std::vector<DefeasibleTheory>& theories) {
    const auto started = Clock::now();
    const auto hexagon = modality_structure();
    const auto worlds = admissible_worlds(hexagon);
    EXPECT(worlds.size() == 4,
           "hexagon has " + std::to_string(worlds.size()) + " worlds, wanted 4");

    int chain_breaks = 0, off_hexagon = 0, hexagon_violations = 0;
    for (const auto& t : theories) {
        for (const auto& [lit, tags] : tag_report(t)) {
            const bool chain_ok =
                (tags.definite != TagValue::Plus || tags.defeasible == TagValue::Plus) &&
                (tags.defeasible != TagValue::Plus || tags.ambiguity == TagValue::Plus);
            chain_breaks += !chain_ok;
            off_hexagon += !hexagon_world_of(tags, worlds);
            hexagon_violations += !check_tags_against_structure(tags).empty();
        }
    }
    EXPECT(chain_breaks == 0, std::to_string(chain_breaks) + " chain violations");
    EXPECT(off_hexagon == 0,
           std::to_string(off_hexagon) + " tag vectors outside the hexagon worlds");
    EXPECT(hexagon_violations == 0,
           std::to_string(hexagon_violations) + " hexagon check violations");
    finish(2, "modality hexagon: 4 worlds, 1000 random theories land on it", started,
           30.0);
}

void criterion_4_oracle(const std::vector<DefeasibleTheory>& theories) {
    const auto started = Clock::now();
    int mismatches = 0;
    for (const auto& t : theories) {
        const auto definite = compute_definite(t);
        const auto defeasible = compute_defeasible(t);
        const auto ambiguity = compute_ambiguity(t);
        const auto expected = oracle::naive_tags(t);
        if (definite.size() != expected.size()) ++mismatches;
        for (const auto& [lit, exp] : expected) {
            auto as_engine = [](char c) {
                return c == '+' ? TagValue::Plus
                       : c == '-' ? TagValue::Minus
                                  : TagValue::Undecided;
            };
            Literal key{lit[0] == '~' ? lit.substr(1) : lit, lit[0] == '~'};
            mismatches += definite.at(key) != as_engine(exp.definite);
            mismatches += defeasible.at(key) != as_engine(exp.defeasible);
            mismatches += ambiguity.at(key) != as_engine(exp.ambiguity);
        }
    }
    EXPECT(mismatches == 0,
           std::to_string(mismatches) + " disagreements with the naive oracle");
    finish(4, "oracle equivalence for all three tag computations", started, 30.0);
}

void criterion_3_penguin() {
    const auto started = Clock::now();
    const auto theory = parse_theory(read_file(kData + "/theories/penguin.dlt"));
    const auto report = tag_report(theory);

    const TagVector flies{TagValue::Minus, TagValue::Minus, TagValue::Plus};
    const TagVector not_flies{TagValue::Minus, TagValue::Plus, TagValue::Plus};
    const TagVector bird{TagValue::Plus, TagValue::Plus, TagValue::Plus};
    EXPECT(report.at({"flies", false}) == flies, "flies tags are wrong");
    EXPECT(report.at({"flies", true}) == not_flies, "~flies tags are wrong");
    EXPECT(report.at({"bird", false}) == bird, "bird tags are wrong");

    const auto expected = oracle::naive_tags(theory);
    EXPECT(expected.at("flies").definite == '-' && expected.at("flies").defeasible == '-' &&
               expected.at("flies").ambiguity == '+',
           "oracle disagrees on flies");
    EXPECT(expected.at("~flies").defeasible == '+', "oracle disagrees on ~flies");
    EXPECT(expected.at("bird").definite == '+', "oracle disagrees on bird");
    finish(3, "penguin theory golden tags", started, 1.0);
}

void criterion_5_intermed() {
    const auto started = Clock::now();
    const auto intermed = parse_structure(read_file(kData + "/structures/intermed.nop"));
    const auto worlds = admissible_worlds(intermed);
    EXPECT(worlds.size() == 5,
           std::to_string(worlds.size()) + " admissible worlds, wanted 5");

    int admissible_rows = 0;
    for (int mask = 0; mask < 8; ++mask) {
        JudgmentAssignment row;
        row.set("proved.yes", (mask & 4) ? Truth::True : Truth::False);
        row.set("proved.no", (mask & 4) ? Truth::False : Truth::True);
        row.set("unclear.yes", (mask & 2) ? Truth::True : Truth::False);
        row.set("unclear.no", (mask & 2) ? Truth::False : Truth::True);
        row.set("incorrect.yes", (mask & 1) ? Truth::True : Truth::False);
        row.set("incorrect.no", (mask & 1) ? Truth::False : Truth::True);
        admissible_rows += check_assignment(intermed, row).empty();
    }
    EXPECT(admissible_rows == 5,
           std::to_string(admissible_rows) + " of 8 level-total rows admissible, wanted 5");

    // The belief case: not proved, unclear, not incorrect.
    JudgmentAssignment belief;
    belief.set("proved.no", Truth::True);
    belief.set("unclear.yes", Truth::True);
    belief.set("incorrect.no", Truth::True);
    const auto completed = propagate_levels(intermed, belief);
    EXPECT(check_assignment(intermed, completed).empty(), "belief case is not admissible");
    EXPECT(completable(worlds, completed), "belief case has no extending world");

    // Proved and unclear together must surface as a sub-alternation violation.
    JudgmentAssignment clash;
    clash.set("proved.yes", Truth::True);
    clash.set("unclear.yes", Truth::True);
    clash.set("incorrect.no", Truth::True);
    const auto violations = check_assignment(intermed, propagate_levels(intermed, clash));
    EXPECT(violations.size() == 1 &&
               violations[0].edge.kind == RelationKind::Subalternation &&
               violations[0].edge.to == "unclear.no",
           "proved+unclear did not raise the sub-alternation violation");
    finish(5, "default intermed structure: 5 of 8 rows admissible", started, 1.0);
}

void criterion_6_genre_table() {
    const auto started = Clock::now();
    const auto intermed = builtin_structures().at("intermed");
    auto row = [&](bool p, bool u, bool i) {
        JudgmentAssignment a;
        a.set("proved.yes", p ? Truth::True : Truth::False);
        a.set("proved.no", p ? Truth::False : Truth::True);
        a.set("unclear.yes", u ? Truth::True : Truth::False);
        a.set("unclear.no", u ? Truth::False : Truth::True);
        a.set("incorrect.yes", i ? Truth::True : Truth::False);
        a.set("incorrect.no", i ? Truth::False : Truth::True);
        return expected_genre(intermed, a);
    };
    using G = JustificationGenre;
    EXPECT(row(true, false, false) == G::Explanation, "(Y,N,N) row");
    EXPECT(row(false, false, true) == G::NegativeReason, "(N,N,Y) row");
    EXPECT(row(true, true, false) == G::ContradictionNewDirection, "(Y,Y,N) row");
    EXPECT(row(true, false, true) == G::ContradictionNewDirection, "(Y,N,Y) row");
    EXPECT(row(false, true, false) == G::BeliefConviction, "(N,Y,N) row");
    EXPECT(row(false, false, false) == G::Unspecified, "(N,N,N) row");
    EXPECT(row(false, true, true) == G::Unspecified, "(N,Y,Y) row");
    EXPECT(row(true, true, true) == G::Unspecified, "(Y,Y,Y) row");
    finish(6, "justification genre table, all 8 rows", started, 1.0);
}

void criterion_7_corpus() {
    const auto started = Clock::now();
    const std::string corpus = kData + "/corpus/intermed-2008";

    const auto validate = run_cli("debate validate " + corpus);
    EXPECT(validate.exit_code == 1,
           "validate exit " + std::to_string(validate.exit_code) + ", wanted 1");
    EXPECT(validate.out.find("well-formed: 41/58") != std::string::npos,
           "well-formed count is not 41/58");

    const auto report = run_cli("debate report " + corpus);
    EXPECT(report.exit_code == 0, "report exit code");
    EXPECT(report.out == read_file(kGolden + "/intermed-2008-report.txt"),
           "report differs from its golden file");

    const auto summary = run_cli("debate summary " + corpus);
    EXPECT(summary.exit_code == 0, "summary exit code");
    EXPECT(summary.out == read_file(kGolden + "/intermed-2008-summary.txt"),
           "summary differs from its golden file");
    finish(7, "synthetic corpus: 41/58 well-formed, golden reports byte-exact", started,
           5.0);
}

void criterion_8_parser_robustness() {
    const auto started = Clock::now();
    std::mt19937 rng(4242);

    int roundtrip_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto t = gen::random_theory(rng);
        if (!(parse_theory(print_theory(t)) == t)) ++roundtrip_failures;
    }
    for (int i = 0; i < 500; ++i) {
        const auto s = gen::random_structure(rng);
        if (!(parse_structure(print_structure(s)) == s)) ++roundtrip_failures;
    }
    EXPECT(roundtrip_failures == 0,
           std::to_string(roundtrip_failures) + " round-trip failures");

    const std::string seeds[] = {
        read_file(kData + "/theories/penguin.dlt"),
        print_theory(gen::random_theory(rng)),
        read_file(kData + "/structures/intermed.nop"),
        read_file(kData + "/structures/classical-square.nop"),
        print_structure(gen::random_structure(rng)),
    };
    int escapes = 0;
    for (int i = 0; i < 10000; ++i) {
        std::string text = seeds[static_cast<std::size_t>(gen::pick(rng, 0, 4))];
        const int mutations = gen::pick(rng, 1, 8);
        for (int m = 0; m < mutations && !text.empty(); ++m) {
            const auto at = static_cast<std::size_t>(
                gen::pick(rng, 0, static_cast<int>(text.size()) - 1));
            switch (gen::pick(rng, 0, 2)) {
                case 0: text[at] = static_cast<char>(gen::pick(rng, 0, 255)); break;
                case 1: text.erase(at, gen::pick(rng, 1, 3)); break;
                default:
                    text.insert(at, 1, static_cast<char>(gen::pick(rng, 0, 255)));
                    break;
            }
        }
        try {
            if (i % 2 == 0)
                parse_theory(text);
            else
                parse_structure(text);
        } catch (const ParseError&) {
        } catch (const SemanticError&) {
        } catch (...) {
            ++escapes;
        }
    }
    EXPECT(escapes == 0, std::to_string(escapes) + " non-parser exceptions escaped");
    finish(8, "parser robustness: round-trips and 10k-file fuzzing", started, 30.0);
}

}  // namespace

int main() {
    const auto theories = random_theories();
    criterion_1_square();
    criterion_2_hexagon(theories);
    criterion_3_penguin();
    criterion_4_oracle(theories);
    criterion_5_intermed();
    criterion_6_genre_table();
    criterion_7_corpus();
    criterion_8_parser_robustness();

    if (g_failed_criteria == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failed_criteria);
    return 1;
}
