#include "oppositio/opposition.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace oppositio {

std::string to_string(Truth v) {
    switch (v) {
        case Truth::False: return "false";
        case Truth::True: return "true";
        case Truth::Unknown: return "unknown";
    }
    return "?";
}

const char* to_string(RelationKind k) {
    switch (k) {
        case RelationKind::Contradiction: return "contradiction";
        case RelationKind::Contrariety: return "contrariety";
        case RelationKind::Subcontrariety: return "subcontrariety";
        case RelationKind::Subalternation: return "subalternation";
    }
    return "?";
}

const char* to_string(InducedKind k) {
    switch (k) {
        case InducedKind::Contradiction: return "contradiction";
        case InducedKind::Contrariety: return "contrariety";
        case InducedKind::Subcontrariety: return "subcontrariety";
        case InducedKind::SubalternationForward: return "subalternation ->";
        case InducedKind::SubalternationBackward: return "subalternation <-";
        case InducedKind::Independent: return "independent";
    }
    return "?";
}

std::string describe(const RelationEdge& e) {
    const char* arrow = e.kind == RelationKind::Subalternation ? " -> " : " <-> ";
    return std::string(to_string(e.kind)) + " " + e.from + arrow + e.to;
}

std::string describe(const Violation& v) {
    return describe(v.edge) + ": " + v.reason;
}

void JudgmentAssignment::set(const JudgmentId& j, Truth v) {
    if (v == Truth::Unknown)
        values_.erase(j);
    else
        values_[j] = v;
}

Truth JudgmentAssignment::get(const JudgmentId& j) const {
    auto it = values_.find(j);
    return it == values_.end() ? Truth::Unknown : it->second;
}

bool JudgmentAssignment::is_total_over(const std::vector<JudgmentId>& names) const {
    return std::all_of(names.begin(), names.end(),
                       [&](const JudgmentId& n) { return get(n) != Truth::Unknown; });
}

std::vector<JudgmentId> OppositionStructure::judgments() const {
    std::vector<JudgmentId> out;
    out.reserve(levels.size() * 2 + free_judgments.size());
    for (const auto& lv : levels) {
        out.push_back(lv.positive);
        out.push_back(lv.negative);
    }
    out.insert(out.end(), free_judgments.begin(), free_judgments.end());
    return out;
}

std::vector<JudgmentId> OppositionStructure::sorted_judgments() const {
    auto out = judgments();
    std::sort(out.begin(), out.end());
    return out;
}

bool OppositionStructure::has_judgment(const JudgmentId& j) const {
    for (const auto& lv : levels)
        if (lv.positive == j || lv.negative == j) return true;
    return std::find(free_judgments.begin(), free_judgments.end(), j) !=
           free_judgments.end();
}

const Level* OppositionStructure::level_of(const JudgmentId& j) const {
    for (const auto& lv : levels)
        if (lv.positive == j || lv.negative == j) return &lv;
    return nullptr;
}

std::vector<RelationEdge> OppositionStructure::all_edges() const {
    std::vector<RelationEdge> out = edges;
    for (const auto& lv : levels) {
        bool declared = std::any_of(edges.begin(), edges.end(), [&](const RelationEdge& e) {
            return e.kind == RelationKind::Contradiction &&
                   ((e.from == lv.positive && e.to == lv.negative) ||
                    (e.from == lv.negative && e.to == lv.positive));
        });
        if (!declared)
            out.push_back({RelationKind::Contradiction, lv.positive, lv.negative});
    }
    return out;
}

void OppositionStructure::validate() const {
    const auto all = judgments();
    if (all.empty())
        throw DomainError("structure '" + name + "' declares no judgments");
    if (all.size() > kMaxJudgments)
        throw CapacityError("structure '" + name + "' has " + std::to_string(all.size()) +
                            " judgments; exact enumeration is capped at " +
                            std::to_string(kMaxJudgments));
    std::set<JudgmentId> seen;
    for (const auto& j : all)
        if (!seen.insert(j).second)
            throw DomainError("duplicate judgment '" + j + "' in structure '" + name + "'");
    for (const auto& lv : levels)
        if (lv.positive == lv.negative)
            throw DomainError("level '" + lv.name + "' pairs judgment '" + lv.positive +
                              "' with itself");
    for (const auto& e : edges) {
        if (e.from == e.to)
            throw DomainError("edge endpoints must differ: " + describe(e));
        if (!seen.count(e.from))
            throw DomainError("edge endpoint '" + e.from + "' is not a judgment");
        if (!seen.count(e.to))
            throw DomainError("edge endpoint '" + e.to + "' is not a judgment");
    }
}

namespace {

// True when the pair of determined values breaks the edge's impossibility
// condition.
bool violates(RelationKind kind, bool from_true, bool to_true) {
    switch (kind) {
        case RelationKind::Contradiction: return from_true == to_true;
        case RelationKind::Contrariety: return from_true && to_true;
        case RelationKind::Subcontrariety: return !from_true && !to_true;
        case RelationKind::Subalternation: return from_true && !to_true;
    }
    return false;
}

std::string violation_reason(const RelationEdge& e, bool from_true) {
    switch (e.kind) {
        case RelationKind::Contradiction:
            return e.from + " and " + e.to + (from_true ? " are both true" : " are both false");
        case RelationKind::Contrariety:
            return e.from + " and " + e.to + " are both true";
        case RelationKind::Subcontrariety:
            return e.from + " and " + e.to + " are both false";
        case RelationKind::Subalternation:
            return e.from + " is true but " + e.to + " is false";
    }
    return "";
}

}  // namespace

std::vector<Violation> check_assignment(const OppositionStructure& s,
                                        const JudgmentAssignment& a) {
    s.validate();
    for (const auto& [j, v] : a.determined())
        if (!s.has_judgment(j))
            throw DomainError("unknown judgment '" + j + "' in assignment");

    std::vector<Violation> out;
    for (const auto& e : s.all_edges()) {
        const Truth f = a.get(e.from);
        const Truth t = a.get(e.to);
        if (f == Truth::Unknown || t == Truth::Unknown) continue;
        if (violates(e.kind, f == Truth::True, t == Truth::True))
            out.push_back({e, f, t, violation_reason(e, f == Truth::True)});
    }
    return out;
}

std::vector<JudgmentAssignment> admissible_worlds(const OppositionStructure& s) {
    s.validate();
    const auto names = s.sorted_judgments();
    const std::size_t n = names.size();

    // Compile edges to bit positions; judgment i gets bit (n-1-i) so the
    // counter enumerates assignments lexicographically, False before True.
    std::map<JudgmentId, int> bit;
    for (std::size_t i = 0; i < n; ++i) bit[names[i]] = static_cast<int>(n - 1 - i);
    struct CompiledEdge {
        RelationKind kind;
        int from, to;
    };
    std::vector<CompiledEdge> compiled;
    for (const auto& e : s.all_edges())
        compiled.push_back({e.kind, bit.at(e.from), bit.at(e.to)});

    std::vector<JudgmentAssignment> worlds;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t c = 0; c < limit; ++c) {
        bool ok = true;
        for (const auto& e : compiled) {
            if (violates(e.kind, (c >> e.from) & 1, (c >> e.to) & 1)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        JudgmentAssignment w;
        for (std::size_t i = 0; i < n; ++i)
            w.set(names[i], ((c >> (n - 1 - i)) & 1) ? Truth::True : Truth::False);
        worlds.push_back(std::move(w));
    }
    return worlds;
}

JudgmentAssignment propagate_levels(const OppositionStructure& s,
                                    const JudgmentAssignment& a) {
    JudgmentAssignment out = a;
    for (const auto& lv : s.levels) {
        const Truth p = out.get(lv.positive);
        const Truth n = out.get(lv.negative);
        if (p != Truth::Unknown && n == Truth::Unknown)
            out.set(lv.negative, p == Truth::True ? Truth::False : Truth::True);
        else if (n != Truth::Unknown && p == Truth::Unknown)
            out.set(lv.positive, n == Truth::True ? Truth::False : Truth::True);
    }
    return out;
}

bool assignment_extends(const JudgmentAssignment& world,
                        const JudgmentAssignment& partial) {
    for (const auto& [j, v] : partial.determined())
        if (world.get(j) != v) return false;
    return true;
}

bool completable(const std::vector<JudgmentAssignment>& worlds,
                 const JudgmentAssignment& a) {
    return std::any_of(worlds.begin(), worlds.end(),
                       [&](const JudgmentAssignment& w) { return assignment_extends(w, a); });
}

bool completable(const OppositionStructure& s, const JudgmentAssignment& a) {
    for (const auto& [j, v] : a.determined())
        if (!s.has_judgment(j))
            throw DomainError("unknown judgment '" + j + "' in assignment");
    return completable(admissible_worlds(s), a);
}

InducedRelation induced_relation(const OppositionStructure& s,
                                 const JudgmentId& x, const JudgmentId& y) {
    if (x == y)
        throw DomainError("induced relation needs two distinct judgments");
    if (!s.has_judgment(x))
        throw DomainError("unknown judgment '" + x + "'");
    if (!s.has_judgment(y))
        throw DomainError("unknown judgment '" + y + "'");

    const auto worlds = admissible_worlds(s);
    if (worlds.empty())
        throw UnsatisfiableError("structure '" + s.name + "' has no admissible worlds");

    InducedRelation r;
    for (const auto& w : worlds) {
        const bool vx = w.get(x) == Truth::True;
        const bool vy = w.get(y) == Truth::True;
        r.can_both_true |= vx && vy;
        r.can_both_false |= !vx && !vy;
        r.can_x_true_y_false |= vx && !vy;
        r.can_y_true_x_false |= vy && !vx;
    }
    if (!r.can_both_true && !r.can_both_false) r.kinds.push_back(InducedKind::Contradiction);
    if (!r.can_both_true && r.can_both_false) r.kinds.push_back(InducedKind::Contrariety);
    if (r.can_both_true && !r.can_both_false) r.kinds.push_back(InducedKind::Subcontrariety);
    if (!r.can_x_true_y_false) r.kinds.push_back(InducedKind::SubalternationForward);
    if (!r.can_y_true_x_false) r.kinds.push_back(InducedKind::SubalternationBackward);
    if (r.kinds.empty()) r.kinds.push_back(InducedKind::Independent);
    return r;
}

bool StructureReport::all_confirmed() const {
    return satisfiable &&
           std::all_of(edges.begin(), edges.end(), [](const EdgeReport& e) {
               return e.status == EdgeStatus::Confirmed;
           });
}

StructureReport verify_structure(const OppositionStructure& s) {
    StructureReport rep;
    const auto worlds = admissible_worlds(s);
    rep.world_count = worlds.size();
    rep.satisfiable = !worlds.empty();
    if (!rep.satisfiable) return rep;

    for (const auto& e : s.all_edges()) {
        bool both_true = false, both_false = false;
        for (const auto& w : worlds) {
            const bool vf = w.get(e.from) == Truth::True;
            const bool vt = w.get(e.to) == Truth::True;
            both_true |= vf && vt;
            both_false |= !vf && !vt;
        }
        EdgeReport er{e, EdgeStatus::Confirmed, ""};
        if (e.kind == RelationKind::Contrariety && !both_false) {
            er.status = EdgeStatus::Strengthened;
            er.note = "both-false never occurs; behaves as a contradiction";
        } else if (e.kind == RelationKind::Subcontrariety && !both_true) {
            er.status = EdgeStatus::Strengthened;
            er.note = "both-true never occurs; behaves as a contradiction";
        }
        rep.edges.push_back(std::move(er));
    }
    return rep;
}

std::string format_world(const std::vector<JudgmentId>& names,
                         const JudgmentAssignment& w) {
    std::string out;
    for (const auto& j : names) {
        if (!out.empty()) out += ' ';
        out += (w.get(j) == Truth::True) ? '+' : '-';
        out += j;
    }
    return out;
}

std::map<std::string, OppositionStructure> builtin_structures() {
    std::map<std::string, OppositionStructure> out;

    {
        OppositionStructure square;
        square.name = "classical-square";
        square.free_judgments = {"A", "E", "I", "O"};
        square.edges = {
            {RelationKind::Contrariety, "A", "E"},
            {RelationKind::Subcontrariety, "I", "O"},
            {RelationKind::Subalternation, "A", "I"},
            {RelationKind::Subalternation, "E", "O"},
            {RelationKind::Contradiction, "A", "O"},
            {RelationKind::Contradiction, "E", "I"},
        };
        out.emplace(square.name, std::move(square));
    }
    {
        // Judging proceeds theory -> feeling -> practice: agreement carries
        // into liking, liking into working.
        OppositionStructure beta;
        beta.name = "betapolitique";
        beta.levels = {
            {"theoretical", "agree", "disagree"},
            {"emotional", "like", "dislike"},
            {"practical", "works", "fails"},
        };
        beta.edges = {
            {RelationKind::Subalternation, "agree", "like"},
            {RelationKind::Subalternation, "like", "works"},
        };
        out.emplace(beta.name, std::move(beta));
    }
    {
        // A proved statement can be neither unclear nor incorrect.
        OppositionStructure intermed;
        intermed.name = "intermed";
        intermed.levels = {
            {"proved", "proved.yes", "proved.no"},
            {"unclear", "unclear.yes", "unclear.no"},
            {"incorrect", "incorrect.yes", "incorrect.no"},
        };
        intermed.edges = {
            {RelationKind::Subalternation, "proved.yes", "unclear.no"},
            {RelationKind::Subalternation, "proved.yes", "incorrect.no"},
        };
        out.emplace(intermed.name, std::move(intermed));
    }
    {
        // Proof strength weakens monotonically: definite implies defeasible
        // implies supported-with-ambiguity.
        OppositionStructure hexagon;
        hexagon.name = "defeasible-hexagon";
        hexagon.levels = {
            {"definite", "definite.plus", "definite.minus"},
            {"defeasible", "defeasible.plus", "defeasible.minus"},
            {"ambiguity", "ambiguity.plus", "ambiguity.minus"},
        };
        hexagon.edges = {
            {RelationKind::Subalternation, "definite.plus", "defeasible.plus"},
            {RelationKind::Subalternation, "defeasible.plus", "ambiguity.plus"},
        };
        out.emplace(hexagon.name, std::move(hexagon));
    }
    return out;
}

}  // namespace oppositio
