#include "oppositio/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace oppositio {

const char* to_string(JustificationGenre g) {
    switch (g) {
        case JustificationGenre::Explanation: return "explanation";
        case JustificationGenre::NegativeReason: return "negative reason";
        case JustificationGenre::ContradictionNewDirection: return "contradiction/new direction";
        case JustificationGenre::BeliefConviction: return "belief/conviction";
        case JustificationGenre::Unspecified: return "unspecified";
    }
    return "?";
}

RepartitionReport repartition(const Debate& d) {
    RepartitionReport rep;
    rep.total_arguments = d.arguments.size();
    std::map<JudgmentId, std::size_t> counts;
    for (const auto& j : d.structure.sorted_judgments()) counts[j] = 0;
    for (const auto& a : d.arguments) {
        const auto completed = propagate_levels(d.structure, a.judgments);
        for (const auto& [name, v] : completed.determined())
            if (v == Truth::True) ++counts[name];
    }
    rep.counts.assign(counts.begin(), counts.end());
    return rep;
}

ComplianceReport compliance(const Debate& d) {
    ComplianceReport rep;
    for (const auto& e : d.structure.edges)
        if (e.kind == RelationKind::Subalternation) rep.edges.push_back({e, 0, 0, 0});

    for (const auto& a : d.arguments) {
        const auto completed = propagate_levels(d.structure, a.judgments);
        bool well_formed = true;
        for (const auto& lv : d.structure.levels)
            if (completed.get(lv.positive) == Truth::Unknown ||
                completed.get(lv.negative) == Truth::Unknown) {
                well_formed = false;
                break;
            }
        if (!well_formed) continue;
        ++rep.well_formed_count;
        for (auto& ec : rep.edges) {
            const Truth f = completed.get(ec.edge.from);
            const Truth t = completed.get(ec.edge.to);
            if (f == Truth::Unknown || t == Truth::Unknown)
                ++ec.not_applicable;
            else if (f == Truth::True && t == Truth::False)
                ++ec.violated;
            else
                ++ec.satisfied;
        }
    }
    return rep;
}

JustificationGenre expected_genre(const OppositionStructure& s,
                                  const JudgmentAssignment& a) {
    if (s.levels.size() != 3)
        throw DomainError("genre expectation needs a structure with exactly three levels");
    bool yes[3];
    for (int i = 0; i < 3; ++i) {
        const Truth v = a.get(s.levels[i].positive);
        if (v == Truth::Unknown ||
            a.get(s.levels[i].negative) == Truth::Unknown)
            throw DomainError("genre expectation needs an assignment total over all levels");
        yes[i] = (v == Truth::True);
    }
    // Fixed 8-row table over (level1, level2, level3).
    if (yes[0] && !yes[1] && !yes[2]) return JustificationGenre::Explanation;
    if (!yes[0] && !yes[1] && yes[2]) return JustificationGenre::NegativeReason;
    if (yes[0] && yes[1] && !yes[2]) return JustificationGenre::ContradictionNewDirection;
    if (yes[0] && !yes[1] && yes[2]) return JustificationGenre::ContradictionNewDirection;
    if (!yes[0] && yes[1] && !yes[2]) return JustificationGenre::BeliefConviction;
    return JustificationGenre::Unspecified;
}

std::map<JustificationGenre, std::size_t> genre_histogram(const Debate& d) {
    std::map<JustificationGenre, std::size_t> hist;
    if (d.structure.levels.size() != 3) return hist;
    for (const auto& a : d.arguments) {
        const auto completed = propagate_levels(d.structure, a.judgments);
        bool total = true;
        for (const auto& lv : d.structure.levels)
            if (completed.get(lv.positive) == Truth::Unknown ||
                completed.get(lv.negative) == Truth::Unknown) {
                total = false;
                break;
            }
        if (total) ++hist[expected_genre(d.structure, completed)];
    }
    return hist;
}

namespace {

std::string escaped(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            default: out += c;
        }
    }
    return out;
}

// The True judgments of the completed assignment, name order.
std::string judgment_labels(const JudgmentAssignment& completed) {
    std::string out;
    for (const auto& [name, v] : completed.determined()) {
        if (v != Truth::True) continue;
        if (!out.empty()) out += ", ";
        out += name;
    }
    return out.empty() ? "(none)" : out;
}

void write_argument(std::ostringstream& out, const Debate& d,
                    const std::map<std::string, std::vector<const Argument*>>& replies,
                    const Argument& a, int depth) {
    const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    const auto completed = propagate_levels(d.structure, a.judgments);
    bool well_formed = true;
    for (const auto& lv : d.structure.levels)
        if (completed.get(lv.positive) == Truth::Unknown ||
            completed.get(lv.negative) == Truth::Unknown) {
            well_formed = false;
            break;
        }

    out << indent << "- [" << a.id << "] by " << a.author << "\n";
    out << indent << "  quote: \"" << escaped(a.quoted_text) << "\"\n";
    out << indent << "  rephrase: " << escaped(a.rephrase) << "\n";
    out << indent << "  judgments: " << judgment_labels(completed) << "\n";
    if (well_formed && d.structure.levels.size() == 3)
        out << indent << "  genre: " << to_string(expected_genre(d.structure, completed))
            << "\n";
    const auto violations = check_assignment(d.structure, completed);
    if (!well_formed)
        out << indent << "  status: not well-formed\n";
    else if (violations.empty())
        out << indent << "  status: ok\n";
    for (const auto& v : violations)
        out << indent << "  violates: " << describe(v.edge) << "\n";
    out << indent << "  justification: " << escaped(a.justification) << "\n";

    auto it = replies.find(a.id);
    if (it != replies.end())
        for (const Argument* r : it->second) write_argument(out, d, replies, *r, depth + 1);
}

}  // namespace

std::string summarize(const Debate& d) {
    std::ostringstream out;

    const auto records = validate_debate(d);
    std::size_t well_formed = 0;
    for (const auto& r : records) well_formed += r.well_formed;

    out << "Debate: " << d.subject << "\n";
    out << "Problem: " << d.problem << "\n";
    out << "Structure: " << d.structure.name << " (" << d.structure.levels.size()
        << " levels, " << d.structure.judgments().size() << " judgments)\n";
    out << "Documents: " << d.documents.size() << "  Participants: " << d.participants.size()
        << "  Arguments: " << d.arguments.size() << " (" << well_formed
        << " well-formed)  Relations: " << d.relations.size() << "\n";

    // Reply forest, children ordered by id.
    std::map<std::string, std::vector<const Argument*>> replies;
    for (const auto& a : d.arguments)
        if (a.parent) replies[*a.parent].push_back(&a);
    for (auto& [_, children] : replies)
        std::sort(children.begin(), children.end(),
                  [](const Argument* x, const Argument* y) { return x->id < y->id; });

    auto documents = d.documents;
    std::sort(documents.begin(), documents.end(),
              [](const Document& x, const Document& y) { return x.id < y.id; });
    for (const auto& doc : documents) {
        out << "\n== " << doc.id << ": " << doc.title << " [" << doc.category << "]\n";
        std::vector<const Argument*> top;
        for (const auto& a : d.arguments)
            if (a.document == doc.id && !a.parent) top.push_back(&a);
        std::sort(top.begin(), top.end(),
                  [](const Argument* x, const Argument* y) { return x->id < y->id; });
        if (top.empty()) {
            out << "(no arguments)\n";
            continue;
        }
        for (const Argument* a : top) write_argument(out, d, replies, *a, 0);
    }

    const auto rep = repartition(d);
    out << "\n== Repartition (" << rep.total_arguments << " arguments)\n";
    for (const auto& [name, count] : rep.counts) out << name << ": " << count << "\n";

    const auto comp = compliance(d);
    out << "\n== Sub-alternation compliance (" << comp.well_formed_count
        << " well-formed arguments)\n";
    if (comp.edges.empty()) out << "(no subalternation edges)\n";
    for (const auto& ec : comp.edges)
        out << ec.edge.from << " -> " << ec.edge.to << ": satisfied " << ec.satisfied
            << ", violated " << ec.violated << ", n/a " << ec.not_applicable << "\n";

    const auto hist = genre_histogram(d);
    if (!hist.empty()) {
        out << "\n== Justification genres (well-formed arguments)\n";
        for (const auto& [genre, count] : hist) out << to_string(genre) << ": " << count << "\n";
    }
    return out.str();
}

}  // namespace oppositio
