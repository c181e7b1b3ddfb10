// Independent oracles for the test suites. These re-derive expected results
// by brute force and naive full-rescan fixpoints, on purpose sharing no code
// with the production paths they check.
#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oppositio/defeasible.hpp"
#include "oppositio/opposition.hpp"

namespace oracle {

// --- world enumeration ------------------------------------------------
// All 2^n total assignments over the sorted judgments, filtered through
// check_assignment one at a time.

inline std::vector<oppositio::JudgmentAssignment> brute_force_worlds(
    const oppositio::OppositionStructure& s) {
    const auto names = s.sorted_judgments();
    const std::size_t n = names.size();
    std::vector<oppositio::JudgmentAssignment> worlds;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
        oppositio::JudgmentAssignment a;
        for (std::size_t i = 0; i < n; ++i)
            a.set(names[i], ((c >> (n - 1 - i)) & 1) ? oppositio::Truth::True
                                                     : oppositio::Truth::False);
        if (oppositio::check_assignment(s, a).empty()) worlds.push_back(std::move(a));
    }
    return worlds;
}

// --- proof tags -------------------------------------------------------
// Literals as plain strings ("~a" is the complement of "a"); each round
// recomputes every condition from the previous round's sets.

using Lit = std::string;

inline Lit complement_of(const Lit& l) {
    return !l.empty() && l[0] == '~' ? l.substr(1) : "~" + l;
}

struct NaiveRule {
    std::string id;
    char kind = 'd';  // 's' strict, 'd' defeasible, 'f' defeater
    std::vector<Lit> body;
    Lit head;
};

struct NaiveTheory {
    std::set<Lit> facts;
    std::vector<NaiveRule> rules;
    std::set<std::pair<std::string, std::string>> sup;  // (stronger, weaker)
};

inline NaiveTheory to_naive(const oppositio::DefeasibleTheory& t) {
    NaiveTheory n;
    for (const auto& f : t.facts) n.facts.insert(f.str());
    for (const auto& r : t.rules) {
        NaiveRule nr;
        nr.id = r.id;
        nr.kind = r.kind == oppositio::RuleKind::Strict       ? 's'
                  : r.kind == oppositio::RuleKind::Defeasible ? 'd'
                                                              : 'f';
        for (const auto& b : r.body) nr.body.push_back(b.str());
        nr.head = r.head.str();
        n.rules.push_back(std::move(nr));
    }
    n.sup = t.superiority;
    return n;
}

inline std::set<Lit> naive_universe(const NaiveTheory& t) {
    std::set<Lit> u;
    for (const auto& f : t.facts) u.insert(f);
    for (const auto& r : t.rules) {
        u.insert(r.head);
        for (const auto& b : r.body) u.insert(b);
    }
    std::set<Lit> closed = u;
    for (const auto& l : u) closed.insert(complement_of(l));
    return closed;
}

inline bool subset(const std::vector<Lit>& body, const std::set<Lit>& in) {
    for (const auto& b : body)
        if (!in.count(b)) return false;
    return true;
}

inline bool meets(const std::vector<Lit>& body, const std::set<Lit>& in) {
    for (const auto& b : body)
        if (in.count(b)) return true;
    return false;
}

// +Delta: in the facts, or the head of a strict rule whose body is all +Delta.
// -Delta: not a fact, and every strict rule for it has a -Delta body literal.
inline std::pair<std::set<Lit>, std::set<Lit>> naive_definite(const NaiveTheory& t) {
    const auto u = naive_universe(t);
    std::set<Lit> plus, minus;
    while (true) {
        std::set<Lit> next_plus, next_minus;
        for (const auto& q : u) {
            bool derivable = t.facts.count(q) != 0;
            for (const auto& r : t.rules)
                if (r.kind == 's' && r.head == q && subset(r.body, plus)) derivable = true;
            if (derivable || plus.count(q)) next_plus.insert(q);

            if (!t.facts.count(q)) {
                bool fails = true;
                for (const auto& r : t.rules)
                    if (r.kind == 's' && r.head == q && !meets(r.body, minus)) fails = false;
                if (fails || minus.count(q)) next_minus.insert(q);
            }
        }
        if (next_plus == plus && next_minus == minus) break;
        plus = next_plus;
        minus = next_minus;
    }
    return {plus, minus};
}

// +delta_ap: support closure over strict and defeasible rules, superiority
// and attacks ignored. Defeaters never support.
inline std::set<Lit> naive_ambiguity_plus(const NaiveTheory& t) {
    const auto u = naive_universe(t);
    std::set<Lit> plus;
    while (true) {
        std::set<Lit> next;
        for (const auto& q : u) {
            bool derivable = t.facts.count(q) != 0;
            for (const auto& r : t.rules)
                if (r.kind != 'f' && r.head == q && subset(r.body, plus)) derivable = true;
            if (derivable || plus.count(q)) next.insert(q);
        }
        if (next == plus) break;
        plus = next;
    }
    return plus;
}

// +delta: +Delta, or a supporting rule fires while the complement is not
// definitely provable and every attacking rule is refuted or overridden by
// a superior firing supporter.
// -delta: -Delta, and every supporting rule is refuted, or the complement is
// definite, or some firing attacker survives every superior supporter.
inline std::pair<std::set<Lit>, std::set<Lit>> naive_defeasible(const NaiveTheory& t) {
    const auto u = naive_universe(t);
    const auto [def_plus, def_minus] = naive_definite(t);

    auto supporters = [&](const Lit& q) {
        std::vector<const NaiveRule*> out;
        for (const auto& r : t.rules)
            if (r.kind != 'f' && r.head == q) out.push_back(&r);
        return out;
    };
    auto attackers = [&](const Lit& q) {
        std::vector<const NaiveRule*> out;
        for (const auto& r : t.rules)
            if (r.head == complement_of(q)) out.push_back(&r);
        return out;
    };
    auto superior = [&](const NaiveRule* a, const NaiveRule* b) {
        return t.sup.count({a->id, b->id}) != 0;
    };

    std::set<Lit> plus, minus;
    while (true) {
        std::set<Lit> next_plus, next_minus;
        for (const auto& q : u) {
            bool in_plus = def_plus.count(q) != 0;
            if (!in_plus && def_minus.count(complement_of(q))) {
                for (const NaiveRule* r : supporters(q)) {
                    if (!subset(r->body, plus)) continue;
                    bool safe = true;
                    for (const NaiveRule* s : attackers(q)) {
                        if (meets(s->body, minus)) continue;
                        bool overridden = false;
                        for (const NaiveRule* o : supporters(q))
                            if (subset(o->body, plus) && superior(o, s)) overridden = true;
                        if (!overridden) safe = false;
                    }
                    if (safe) in_plus = true;
                }
            }
            if (in_plus || plus.count(q)) next_plus.insert(q);

            bool in_minus = def_minus.count(q) != 0;
            if (in_minus) {
                for (const NaiveRule* r : supporters(q)) {
                    if (meets(r->body, minus)) continue;
                    if (def_plus.count(complement_of(q))) continue;
                    bool beaten = false;
                    for (const NaiveRule* s : attackers(q)) {
                        if (!subset(s->body, plus)) continue;
                        bool survives = true;
                        for (const NaiveRule* o : supporters(q))
                            if (superior(o, s) && !meets(o->body, minus)) survives = false;
                        if (survives) beaten = true;
                    }
                    if (!beaten) in_minus = false;
                }
            }
            if (in_minus || minus.count(q)) next_minus.insert(q);
        }
        if (next_plus == plus && next_minus == minus) break;
        plus = next_plus;
        minus = next_minus;
    }
    return {plus, minus};
}

struct NaiveTags {
    char definite = '?';
    char defeasible = '?';
    char ambiguity = '?';
};

inline std::map<Lit, NaiveTags> naive_tags(const oppositio::DefeasibleTheory& theory) {
    const NaiveTheory t = to_naive(theory);
    const auto u = naive_universe(t);
    const auto [dp, dm] = naive_definite(t);
    const auto [pp, pm] = naive_defeasible(t);
    const auto ap = naive_ambiguity_plus(t);

    std::map<Lit, NaiveTags> out;
    for (const auto& q : u) {
        NaiveTags tags;
        tags.definite = dp.count(q) ? '+' : dm.count(q) ? '-' : '?';
        tags.defeasible = pp.count(q) ? '+' : pm.count(q) ? '-' : '?';
        tags.ambiguity = ap.count(q) ? '+' : '-';
        out[q] = tags;
    }
    return out;
}

}  // namespace oracle
