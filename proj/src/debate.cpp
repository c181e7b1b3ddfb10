#include "oppositio/debate.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "oppositio/dsl.hpp"

namespace oppositio {

using nlohmann::json;
using nlohmann::ordered_json;

const char* to_string(ArgRelationKind k) {
    switch (k) {
        case ArgRelationKind::Confirms: return "confirms";
        case ArgRelationKind::Contradicts: return "contradicts";
        case ArgRelationKind::Contradiction: return "contradiction";
        case ArgRelationKind::Contrariety: return "contrariety";
        case ArgRelationKind::Subcontrariety: return "subcontrariety";
        case ArgRelationKind::Subalternation: return "subalternation";
    }
    return "?";
}

std::optional<ArgRelationKind> arg_relation_kind_from(const std::string& s) {
    if (s == "confirms") return ArgRelationKind::Confirms;
    if (s == "contradicts") return ArgRelationKind::Contradicts;
    if (s == "contradiction") return ArgRelationKind::Contradiction;
    if (s == "contrariety") return ArgRelationKind::Contrariety;
    if (s == "subcontrariety") return ArgRelationKind::Subcontrariety;
    if (s == "subalternation") return ArgRelationKind::Subalternation;
    return std::nullopt;
}

const Document* Debate::find_document(const std::string& id) const {
    for (const auto& d : documents)
        if (d.id == id) return &d;
    return nullptr;
}

const Participant* Debate::find_participant(const std::string& id) const {
    for (const auto& p : participants)
        if (p.id == id) return &p;
    return nullptr;
}

const Argument* Debate::find_argument(const std::string& id) const {
    for (const auto& a : arguments)
        if (a.id == id) return &a;
    return nullptr;
}

namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path, const std::string& label) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError(label, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string require_string(const json& j, const char* key, const std::string& file,
                           long record = -1) {
    auto fail = [&](const std::string& why) -> LoadError {
        return record >= 0 ? LoadError(file, record, why) : LoadError(file, why);
    };
    if (!j.contains(key)) throw fail(std::string("missing field '") + key + "'");
    if (!j.at(key).is_string()) throw fail(std::string("field '") + key + "' must be a string");
    return j.at(key).get<std::string>();
}

std::size_t require_offset(const json& j, const char* key, const std::string& file,
                           long record) {
    if (!j.contains(key) || !j.at(key).is_number_unsigned())
        throw LoadError(file, record,
                        std::string("field '") + key + "' must be a non-negative integer");
    return j.at(key).get<std::size_t>();
}

Argument parse_argument_record(const json& j, const std::string& file, long record,
                               std::vector<ArgumentRelation>* relations) {
    Argument a;
    a.id = require_string(j, "id", file, record);
    a.author = require_string(j, "author", file, record);
    a.document = require_string(j, "document", file, record);
    a.selection_start = require_offset(j, "selection_start", file, record);
    a.selection_end = require_offset(j, "selection_end", file, record);
    a.quoted_text = require_string(j, "quoted_text", file, record);
    a.rephrase = require_string(j, "rephrase", file, record);
    a.justification = require_string(j, "justification", file, record);
    if (!j.contains("judgments") || !j.at("judgments").is_object())
        throw LoadError(file, record, "field 'judgments' must be an object");
    for (const auto& [name, val] : j.at("judgments").items()) {
        if (!val.is_boolean())
            throw LoadError(file, record, "judgment '" + name + "' must be true or false");
        a.judgments.set(name, val.get<bool>() ? Truth::True : Truth::False);
    }
    if (j.contains("parent")) {
        if (!j.at("parent").is_string())
            throw LoadError(file, record, "field 'parent' must be a string");
        a.parent = j.at("parent").get<std::string>();
    }
    if (j.contains("relations")) {
        if (!j.at("relations").is_array())
            throw LoadError(file, record, "field 'relations' must be an array");
        for (const auto& rel : j.at("relations")) {
            ArgumentRelation r;
            r.from = a.id;
            r.to = require_string(rel, "to", file, record);
            const std::string kind = require_string(rel, "kind", file, record);
            auto parsed = arg_relation_kind_from(kind);
            if (!parsed)
                throw LoadError(file, record, "unknown relation kind '" + kind + "'");
            r.kind = *parsed;
            relations->push_back(std::move(r));
        }
    }
    return a;
}

}  // namespace

Debate load_debate(const fs::path& dir) {
    Debate d;

    json manifest;
    try {
        manifest = json::parse(read_file(dir / "debate.json", "debate.json"));
    } catch (const json::exception& e) {
        throw LoadError("debate.json", e.what());
    }
    d.subject = require_string(manifest, "subject", "debate.json");
    if (d.subject.empty()) throw LoadError("debate.json", "subject must be non-empty");
    d.problem = require_string(manifest, "problem", "debate.json");

    for (const auto& p : manifest.value("participants", json::array()))
        d.participants.push_back({require_string(p, "id", "debate.json"),
                                  require_string(p, "display_name", "debate.json")});
    for (const auto& g : manifest.value("groups", json::array())) {
        Group group{require_string(g, "id", "debate.json"),
                    require_string(g, "name", "debate.json"),
                    {}};
        for (const auto& m : g.value("members", json::array())) {
            if (!m.is_string()) throw LoadError("debate.json", "group members must be strings");
            group.members.push_back(m.get<std::string>());
        }
        d.groups.push_back(std::move(group));
    }
    for (const auto& doc : manifest.value("documents", json::array())) {
        Document document;
        document.id = require_string(doc, "id", "debate.json");
        document.title = require_string(doc, "title", "debate.json");
        document.category = require_string(doc, "category", "debate.json");
        document.filename = require_string(doc, "filename", "debate.json");
        document.body =
            read_file(dir / "documents" / document.filename, "documents/" + document.filename);
        d.documents.push_back(std::move(document));
    }

    try {
        d.structure = parse_structure(read_file(dir / "structure.nop", "structure.nop"));
    } catch (const LoadError&) {
        throw;
    } catch (const Error& e) {
        throw LoadError("structure.nop", e.what());
    }

    // Manifest-level integrity.
    std::set<std::string> participant_ids, document_ids;
    for (const auto& p : d.participants)
        if (!participant_ids.insert(p.id).second)
            throw LoadError("debate.json", "duplicate participant id '" + p.id + "'");
    for (const auto& doc : d.documents)
        if (!document_ids.insert(doc.id).second)
            throw LoadError("debate.json", "duplicate document id '" + doc.id + "'");
    for (const auto& g : d.groups)
        for (const auto& m : g.members)
            if (!participant_ids.count(m))
                throw LoadError("debate.json",
                                "group '" + g.id + "' references unknown participant '" + m + "'");

    const std::string file = "arguments.jsonl";
    std::istringstream lines(read_file(dir / file, file));
    std::string line;
    long line_no = 0;
    std::set<std::string> argument_ids;
    while (std::getline(lines, line)) {
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json record;
        try {
            record = json::parse(line);
        } catch (const json::exception& e) {
            throw LoadError(file, line_no, e.what());
        }
        Argument a = parse_argument_record(record, file, line_no, &d.relations);

        if (!argument_ids.insert(a.id).second)
            throw LoadError(file, line_no, "duplicate argument id '" + a.id + "'");
        if (!participant_ids.count(a.author))
            throw LoadError(file, line_no,
                            "argument '" + a.id + "' has unknown author '" + a.author + "'");
        const Document* doc = d.find_document(a.document);
        if (!doc)
            throw LoadError(file, line_no,
                            "argument '" + a.id + "' references unknown document '" +
                                a.document + "'");
        if (a.rephrase.empty())
            throw LoadError(file, line_no, "argument '" + a.id + "' has an empty rephrase");
        if (a.justification.empty())
            throw LoadError(file, line_no, "argument '" + a.id + "' has an empty justification");
        if (!(a.selection_start < a.selection_end && a.selection_end <= doc->body.size()))
            throw LoadError(file, line_no,
                            "argument '" + a.id + "' selection [" +
                                std::to_string(a.selection_start) + "," +
                                std::to_string(a.selection_end) + ") is out of bounds");
        if (doc->body.compare(a.selection_start, a.selection_end - a.selection_start,
                              a.quoted_text) != 0)
            throw LoadError(file, line_no,
                            "argument '" + a.id + "' quoted_text does not match the document slice");
        for (const auto& [name, _] : a.judgments.determined())
            if (!d.structure.has_judgment(name))
                throw LoadError(file, line_no,
                                "argument '" + a.id + "' judges unknown judgment '" + name + "'");
        d.arguments.push_back(std::move(a));
    }

    // Thread links: parents must resolve and form a forest.
    for (const auto& a : d.arguments) {
        if (!a.parent) continue;
        if (!argument_ids.count(*a.parent))
            throw LoadError(file, "argument '" + a.id + "' replies to unknown argument '" +
                                      *a.parent + "'");
        std::set<std::string> seen{a.id};
        const Argument* cur = d.find_argument(*a.parent);
        while (cur) {
            if (!seen.insert(cur->id).second)
                throw LoadError(file, "reply cycle through argument '" + cur->id + "'");
            cur = cur->parent ? d.find_argument(*cur->parent) : nullptr;
        }
    }
    for (const auto& r : d.relations) {
        if (r.from == r.to)
            throw LoadError(file, "relation of '" + r.from + "' points at itself");
        if (!argument_ids.count(r.to) && !document_ids.count(r.to))
            throw LoadError(file, "relation of '" + r.from + "' targets unknown id '" + r.to + "'");
    }
    return d;
}

void save_debate(const Debate& d, const fs::path& dir) {
    fs::create_directories(dir / "documents");

    ordered_json manifest;
    manifest["subject"] = d.subject;
    manifest["problem"] = d.problem;
    manifest["participants"] = ordered_json::array();
    for (const auto& p : d.participants)
        manifest["participants"].push_back({{"id", p.id}, {"display_name", p.display_name}});
    manifest["groups"] = ordered_json::array();
    for (const auto& g : d.groups)
        manifest["groups"].push_back({{"id", g.id}, {"name", g.name}, {"members", g.members}});
    manifest["documents"] = ordered_json::array();
    for (const auto& doc : d.documents)
        manifest["documents"].push_back({{"id", doc.id},
                                         {"title", doc.title},
                                         {"category", doc.category},
                                         {"filename", doc.filename}});
    std::ofstream(dir / "debate.json", std::ios::binary) << manifest.dump(2) << "\n";

    for (const auto& doc : d.documents)
        std::ofstream(dir / "documents" / doc.filename, std::ios::binary) << doc.body;

    std::ofstream(dir / "structure.nop", std::ios::binary) << print_structure(d.structure);

    std::ofstream args(dir / "arguments.jsonl", std::ios::binary);
    for (const auto& a : d.arguments) {
        ordered_json record;
        record["id"] = a.id;
        record["author"] = a.author;
        record["document"] = a.document;
        record["selection_start"] = a.selection_start;
        record["selection_end"] = a.selection_end;
        record["quoted_text"] = a.quoted_text;
        record["rephrase"] = a.rephrase;
        record["judgments"] = ordered_json::object();
        for (const auto& [name, v] : a.judgments.determined())
            record["judgments"][name] = (v == Truth::True);
        record["justification"] = a.justification;
        if (a.parent) record["parent"] = *a.parent;
        ordered_json rels = ordered_json::array();
        for (const auto& r : d.relations)
            if (r.from == a.id) rels.push_back({{"to", r.to}, {"kind", to_string(r.kind)}});
        if (!rels.empty()) record["relations"] = rels;
        args << record.dump() << "\n";
    }
}

namespace {

ValidationRecord validate_one(const OppositionStructure& s,
                              const std::vector<JudgmentAssignment>& worlds,
                              const Argument& a) {
    ValidationRecord rec;
    rec.argument_id = a.id;
    const JudgmentAssignment completed = propagate_levels(s, a.judgments);
    rec.well_formed = true;
    for (const auto& lv : s.levels)
        if (completed.get(lv.positive) == Truth::Unknown ||
            completed.get(lv.negative) == Truth::Unknown) {
            rec.well_formed = false;
            break;
        }
    rec.violations = check_assignment(s, completed);
    rec.completable = completable(worlds, completed);
    return rec;
}

}  // namespace

ValidationRecord validate_argument(const Debate& d, const Argument& a) {
    return validate_one(d.structure, admissible_worlds(d.structure), a);
}

std::vector<ValidationRecord> validate_debate(const Debate& d) {
    const auto worlds = admissible_worlds(d.structure);
    std::vector<ValidationRecord> out;
    out.reserve(d.arguments.size());
    for (const auto& a : d.arguments) out.push_back(validate_one(d.structure, worlds, a));
    std::sort(out.begin(), out.end(), [](const ValidationRecord& x, const ValidationRecord& y) {
        return x.argument_id < y.argument_id;
    });
    return out;
}

}  // namespace oppositio
