#include "oppositio/defeasible.hpp"

#include <algorithm>
#include <functional>

namespace oppositio {

const char* arrow_of(RuleKind k) {
    switch (k) {
        case RuleKind::Strict: return "->";
        case RuleKind::Defeasible: return "=>";
        case RuleKind::Defeater: return "~>";
    }
    return "?";
}

const char* sign_of(TagValue v) {
    switch (v) {
        case TagValue::Plus: return "+";
        case TagValue::Minus: return "-";
        case TagValue::Undecided: return "?";
    }
    return "?";
}

const Rule* DefeasibleTheory::find_rule(const std::string& id) const {
    for (const auto& r : rules)
        if (r.id == id) return &r;
    return nullptr;
}

std::vector<Literal> DefeasibleTheory::universe() const {
    std::set<Literal> lits;
    for (const auto& f : facts) lits.insert(f);
    for (const auto& r : rules) {
        lits.insert(r.head);
        for (const auto& b : r.body) lits.insert(b);
    }
    std::set<Literal> closed = lits;
    for (const auto& l : lits) closed.insert(l.complement());
    return {closed.begin(), closed.end()};
}

std::vector<std::pair<std::string, std::string>> DefeasibleTheory::inert_superiority() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [a, b] : superiority) {
        const Rule* ra = find_rule(a);
        const Rule* rb = find_rule(b);
        if (ra && rb && ra->head != rb->head.complement()) out.push_back({a, b});
    }
    return out;
}

void DefeasibleTheory::validate() const {
    std::set<std::string> ids;
    for (const auto& r : rules)
        if (!ids.insert(r.id).second)
            throw DomainError("duplicate rule id '" + r.id + "'");
    for (const auto& [a, b] : superiority) {
        if (!ids.count(a))
            throw DomainError("superiority references unknown rule id '" + a + "'");
        if (!ids.count(b))
            throw DomainError("superiority references unknown rule id '" + b + "'");
    }
    // Cycle check over the superiority graph.
    std::map<std::string, std::vector<std::string>> succ;
    for (const auto& [a, b] : superiority) succ[a].push_back(b);
    std::map<std::string, int> state;  // 0 unvisited, 1 on stack, 2 done
    std::function<void(const std::string&)> visit = [&](const std::string& v) {
        state[v] = 1;
        for (const auto& w : succ[v]) {
            if (state[w] == 1)
                throw DomainError("superiority relation is cyclic through '" + w + "'");
            if (state[w] == 0) visit(w);
        }
        state[v] = 2;
    };
    for (const auto& [v, _] : succ)
        if (state[v] == 0) visit(v);
}

bool DefeasibleTheory::operator==(const DefeasibleTheory& other) const {
    if (facts != other.facts || superiority != other.superiority) return false;
    auto sorted_rules = [](const DefeasibleTheory& t) {
        auto rs = t.rules;
        std::sort(rs.begin(), rs.end(),
                  [](const Rule& a, const Rule& b) { return a.id < b.id; });
        return rs;
    };
    return sorted_rules(*this) == sorted_rules(other);
}

namespace {

// Interned view of a theory: literals as dense indices, rules grouped by head.
struct TheoryIndex {
    std::vector<Literal> lits;
    std::map<Literal, int> id;
    std::vector<int> comp;  // literal -> complement

    struct IRule {
        int rule_idx;
        RuleKind kind;
        int head;
        std::vector<int> body;
    };
    std::vector<IRule> rules;
    std::vector<std::vector<int>> rules_for;         // all kinds, by head
    std::vector<std::vector<int>> sd_rules_for;      // strict + defeasible
    std::vector<std::vector<int>> strict_rules_for;  // strict only
    std::vector<char> is_fact;
    std::set<std::pair<int, int>> sup;  // (stronger, weaker) rule indices

    explicit TheoryIndex(const DefeasibleTheory& t) {
        lits = t.universe();
        for (std::size_t i = 0; i < lits.size(); ++i) id[lits[i]] = static_cast<int>(i);
        comp.resize(lits.size());
        for (std::size_t i = 0; i < lits.size(); ++i)
            comp[i] = id.at(lits[i].complement());

        is_fact.assign(lits.size(), 0);
        for (const auto& f : t.facts) is_fact[id.at(f)] = 1;

        rules_for.resize(lits.size());
        sd_rules_for.resize(lits.size());
        strict_rules_for.resize(lits.size());
        std::map<std::string, int> rule_idx_by_id;
        for (const auto& r : t.rules) {
            IRule ir;
            ir.rule_idx = static_cast<int>(rules.size());
            ir.kind = r.kind;
            ir.head = id.at(r.head);
            for (const auto& b : r.body) ir.body.push_back(id.at(b));
            rule_idx_by_id[r.id] = ir.rule_idx;
            rules_for[ir.head].push_back(ir.rule_idx);
            if (r.kind != RuleKind::Defeater) sd_rules_for[ir.head].push_back(ir.rule_idx);
            if (r.kind == RuleKind::Strict) strict_rules_for[ir.head].push_back(ir.rule_idx);
            rules.push_back(std::move(ir));
        }
        for (const auto& [a, b] : t.superiority)
            sup.insert({rule_idx_by_id.at(a), rule_idx_by_id.at(b)});
    }

    bool body_all(const IRule& r, const std::vector<char>& in) const {
        return std::all_of(r.body.begin(), r.body.end(), [&](int b) { return in[b]; });
    }
    bool body_some(const IRule& r, const std::vector<char>& in) const {
        return std::any_of(r.body.begin(), r.body.end(), [&](int b) { return in[b]; });
    }
    bool superior(int t, int s) const { return sup.count({t, s}) != 0; }
};

// Least fixpoints of the strict fragment: (plus, minus) for +Delta/-Delta.
std::pair<std::vector<char>, std::vector<char>> definite_sets(const TheoryIndex& ix) {
    const std::size_t n = ix.lits.size();
    std::vector<char> plus(n, 0), minus(n, 0);

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = 0; q < n; ++q) {
            if (!plus[q]) {
                bool derive = ix.is_fact[q];
                if (!derive)
                    for (int ri : ix.strict_rules_for[q])
                        if (ix.body_all(ix.rules[ri], plus)) {
                            derive = true;
                            break;
                        }
                if (derive) plus[q] = 1, changed = true;
            }
            if (!minus[q] && !ix.is_fact[q]) {
                bool fail = true;
                for (int ri : ix.strict_rules_for[q])
                    if (!ix.body_some(ix.rules[ri], minus)) {
                        fail = false;
                        break;
                    }
                if (fail) minus[q] = 1, changed = true;
            }
        }
    }
    return {plus, minus};
}

std::vector<char> ambiguity_plus_set(const TheoryIndex& ix) {
    const std::size_t n = ix.lits.size();
    std::vector<char> plus(n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = 0; q < n; ++q) {
            if (plus[q]) continue;
            bool derive = ix.is_fact[q];
            if (!derive)
                for (int ri : ix.sd_rules_for[q])
                    if (ix.body_all(ix.rules[ri], plus)) {
                        derive = true;
                        break;
                    }
            if (derive) plus[q] = 1, changed = true;
        }
    }
    return plus;
}

// +delta/-delta as a joint least fixpoint. An attacker is any rule for the
// complement; only strict and defeasible rules support or override.
std::pair<std::vector<char>, std::vector<char>> defeasible_sets(
    const TheoryIndex& ix, const std::vector<char>& def_plus,
    const std::vector<char>& def_minus) {
    const std::size_t n = ix.lits.size();
    std::vector<char> plus(n, 0), minus(n, 0);

    auto plus_holds = [&](int q) {
        if (def_plus[q]) return true;
        if (!def_minus[ix.comp[q]]) return false;
        for (int ri : ix.sd_rules_for[q]) {
            if (!ix.body_all(ix.rules[ri], plus)) continue;
            bool attackers_handled = true;
            for (int si : ix.rules_for[ix.comp[q]]) {
                if (ix.body_some(ix.rules[si], minus)) continue;  // refuted
                bool overridden = false;
                for (int ti : ix.sd_rules_for[q])
                    if (ix.body_all(ix.rules[ti], plus) && ix.superior(ti, si)) {
                        overridden = true;
                        break;
                    }
                if (!overridden) {
                    attackers_handled = false;
                    break;
                }
            }
            if (attackers_handled) return true;
        }
        return false;
    };

    auto minus_holds = [&](int q) {
        if (!def_minus[q]) return false;
        for (int ri : ix.sd_rules_for[q]) {
            if (ix.body_some(ix.rules[ri], minus)) continue;
            if (def_plus[ix.comp[q]]) continue;
            bool beaten = false;
            for (int si : ix.rules_for[ix.comp[q]]) {
                if (!ix.body_all(ix.rules[si], plus)) continue;
                // The attack stands only if no superior supporting rule
                // survives; survival must be refuted constructively.
                bool attack_stands = true;
                for (int ti : ix.sd_rules_for[q])
                    if (ix.superior(ti, si) && !ix.body_some(ix.rules[ti], minus)) {
                        attack_stands = false;
                        break;
                    }
                if (attack_stands) {
                    beaten = true;
                    break;
                }
            }
            if (!beaten) return false;
        }
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = 0; q < n; ++q) {
            if (!plus[q] && plus_holds(static_cast<int>(q))) plus[q] = 1, changed = true;
            if (!minus[q] && minus_holds(static_cast<int>(q))) minus[q] = 1, changed = true;
        }
    }
    return {plus, minus};
}

std::map<Literal, TagValue> to_tag_map(const TheoryIndex& ix,
                                       const std::vector<char>& plus,
                                       const std::vector<char>& minus) {
    std::map<Literal, TagValue> out;
    for (std::size_t i = 0; i < ix.lits.size(); ++i)
        out[ix.lits[i]] = plus[i]   ? TagValue::Plus
                          : minus[i] ? TagValue::Minus
                                     : TagValue::Undecided;
    return out;
}

}  // namespace

std::map<Literal, TagValue> compute_definite(const DefeasibleTheory& t) {
    t.validate();
    TheoryIndex ix(t);
    auto [plus, minus] = definite_sets(ix);
    return to_tag_map(ix, plus, minus);
}

std::map<Literal, TagValue> compute_ambiguity(const DefeasibleTheory& t) {
    t.validate();
    TheoryIndex ix(t);
    auto plus = ambiguity_plus_set(ix);
    std::vector<char> minus(plus.size());
    for (std::size_t i = 0; i < plus.size(); ++i) minus[i] = !plus[i];
    return to_tag_map(ix, plus, minus);
}

std::map<Literal, TagValue> compute_defeasible(const DefeasibleTheory& t) {
    t.validate();
    TheoryIndex ix(t);
    auto [dplus, dminus] = definite_sets(ix);
    auto [plus, minus] = defeasible_sets(ix, dplus, dminus);
    return to_tag_map(ix, plus, minus);
}

std::map<Literal, TagVector> tag_report(const DefeasibleTheory& t) {
    t.validate();
    TheoryIndex ix(t);
    auto [dplus, dminus] = definite_sets(ix);
    auto [pplus, pminus] = defeasible_sets(ix, dplus, dminus);
    auto aplus = ambiguity_plus_set(ix);

    std::map<Literal, TagVector> out;
    for (std::size_t i = 0; i < ix.lits.size(); ++i) {
        TagVector v;
        v.definite = dplus[i] ? TagValue::Plus : dminus[i] ? TagValue::Minus : TagValue::Undecided;
        v.defeasible = pplus[i] ? TagValue::Plus : pminus[i] ? TagValue::Minus : TagValue::Undecided;
        v.ambiguity = aplus[i] ? TagValue::Plus : TagValue::Minus;
        out[ix.lits[i]] = v;
    }
    return out;
}

OppositionStructure modality_structure() {
    return builtin_structures().at("defeasible-hexagon");
}

std::vector<Violation> check_tags_against_structure(const TagVector& tags) {
    const auto hexagon = modality_structure();
    JudgmentAssignment a;
    auto place = [&](TagValue v, const std::string& family) {
        if (v == TagValue::Plus) a.set(family + ".plus", Truth::True);
        else if (v == TagValue::Minus) a.set(family + ".minus", Truth::True);
    };
    place(tags.definite, "definite");
    place(tags.defeasible, "defeasible");
    place(tags.ambiguity, "ambiguity");
    return check_assignment(hexagon, propagate_levels(hexagon, a));
}

}  // namespace oppositio
