#include "finrep/io.hpp"

#include <json.hpp>

#include "finrep/errors.hpp"

namespace finrep {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

const json& need(const json& j, const char* key) {
    if (!j.is_object())
        throw ParseError("expected an object around key '" +
                         std::string(key) + "'");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError("missing key '" + std::string(key) + "'");
    return *it;
}

int need_int(const json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw ParseError(what + " must be an integer");
    return j.get<int>();
}

std::string need_string(const json& j, const std::string& what) {
    if (!j.is_string()) throw ParseError(what + " must be a string");
    return j.get<std::string>();
}

// n x n integer table with entries in [0, limit)
Table read_table(const json& j, int n, int limit, const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ParseError(what + " must be a " + std::to_string(n) + "x" +
                         std::to_string(n) + " array");
    Table t;
    for (const json& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError(what + " must be a " + std::to_string(n) + "x" +
                             std::to_string(n) + " array");
        std::vector<int> r;
        for (const json& cell : row) {
            int v = need_int(cell, what + " entry");
            if (v < 0 || v >= limit)
                throw ParseError(what + " entry " + std::to_string(v) +
                                 " out of range [0," + std::to_string(limit) +
                                 ")");
            r.push_back(v);
        }
        t.push_back(std::move(r));
    }
    return t;
}

json table_json(const Table& t) {
    json out = json::array();
    for (const auto& row : t) out.push_back(row);
    return out;
}

std::vector<std::string> read_elements(const json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("'elements' must be a nonempty array of names");
    std::vector<std::string> names;
    for (const json& e : j) {
        std::string name = need_string(e, "element name");
        if (name.empty()) throw ParseError("element names must be nonempty");
        for (const std::string& prev : names)
            if (prev == name)
                throw ParseError("duplicate element name '" + name + "'");
        names.push_back(std::move(name));
    }
    if (static_cast<int>(names.size()) > kMaxElements)
        throw ParseError("carrier size " + std::to_string(names.size()) +
                         " exceeds the supported maximum " +
                         std::to_string(kMaxElements));
    return names;
}

void require_valid(const ValidationReport& report, const std::string& what) {
    if (!report.ok())
        throw ValidationError(what + " fails validation: " + report.summary());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// -- certificates -----------------------------------------------------------

json move_json(const Move& m) {
    json out;
    out["x"] = m.x;
    out["y"] = m.y;
    switch (m.kind) {
        case Move::Kind::Composition:
            out["kind"] = "composition";
            out["z"] = m.z;
            out["b"] = m.e1;
            out["c"] = m.e2;
            break;
        case Move::Kind::Witness:
            out["kind"] = "witness";
            out["d"] = m.e1;
            out["e"] = m.e2;
            out["just"] = m.just;
            break;
        case Move::Kind::Join:
            out["kind"] = "join";
            out["c"] = m.e1;
            out["d"] = m.e2;
            break;
    }
    return out;
}

json certificate_json(const Certificate& c) {
    if (c.win) return json{{"win", true}};
    json out;
    if (c.move) out["move"] = move_json(*c.move);
    json children = json::array();
    for (const Certificate& ch : c.children)
        children.push_back(certificate_json(ch));
    out["children"] = std::move(children);
    return out;
}

int cert_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw MalformedCertificate(std::string(what) +
                                   " must be an integer in a certificate");
    return j.get<int>();
}

const json& cert_need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw MalformedCertificate("certificate move lacks key '" +
                                   std::string(key) + "'");
    return *it;
}

Move parse_move(const json& j) {
    if (!j.is_object()) throw MalformedCertificate("move must be an object");
    std::string kind = cert_need(j, "kind").is_string()
                           ? j.at("kind").get<std::string>()
                           : throw MalformedCertificate("move kind must be a string");
    Move m{};
    m.x = cert_int(cert_need(j, "x"), "x");
    m.y = cert_int(cert_need(j, "y"), "y");
    if (kind == "composition") {
        m.kind = Move::Kind::Composition;
        m.z = cert_int(cert_need(j, "z"), "z");
        m.e1 = cert_int(cert_need(j, "b"), "b");
        m.e2 = cert_int(cert_need(j, "c"), "c");
        m.just = -1;
    } else if (kind == "witness") {
        m.kind = Move::Kind::Witness;
        m.z = -1;
        m.e1 = cert_int(cert_need(j, "d"), "d");
        m.e2 = cert_int(cert_need(j, "e"), "e");
        m.just = cert_int(cert_need(j, "just"), "just");
    } else if (kind == "join") {
        m.kind = Move::Kind::Join;
        m.z = -1;
        m.e1 = cert_int(cert_need(j, "c"), "c");
        m.e2 = cert_int(cert_need(j, "d"), "d");
        m.just = -1;
    } else {
        throw MalformedCertificate("unknown move kind '" + kind + "'");
    }
    return m;
}

Certificate parse_certificate(const json& j) {
    if (!j.is_object())
        throw MalformedCertificate("certificate node must be an object");
    Certificate c;
    if (j.contains("win")) {
        if (!j.at("win").is_boolean() || !j.at("win").get<bool>() ||
            j.contains("move") || j.contains("children"))
            throw MalformedCertificate(
                "certificate leaf must be exactly {\"win\": true}");
        c.win = true;
        return c;
    }
    if (!j.contains("move") || !j.contains("children"))
        throw MalformedCertificate(
            "certificate inner node needs 'move' and 'children'");
    c.move = parse_move(j.at("move"));
    if (!j.at("children").is_array())
        throw MalformedCertificate("certificate children must be an array");
    for (const json& ch : j.at("children"))
        c.children.push_back(parse_certificate(ch));
    return c;
}

} // namespace

AlgebraFile parse_algebra(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    std::string kind = need_string(need(j, "kind"), "'kind'");
    AlgebraFile out;
    out.elements = read_elements(need(j, "elements"));
    const int n = out.size();
    Table compose = read_table(need(j, "compose"), n, n, "'compose'");

    if (kind == "rs") {
        out.kind = AlgebraFile::Kind::Rs;
        Table order = read_table(need(j, "order"), n, 2, "'order'");
        BoolMatrix leq(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (order[a][b]) leq[a].add(b);
        FinitePoset poset(std::move(leq), n);  // throws ValidationError
        bool has_l = j.contains("left_residual");
        bool has_r = j.contains("right_residual");
        if (has_l != has_r)
            throw ParseError(
                "give both residual tables or neither; one alone is "
                "ambiguous");
        ResiduatedSemigroup rs =
            has_l ? ResiduatedSemigroup{std::move(poset), std::move(compose),
                                        read_table(j.at("left_residual"), n, n,
                                                   "'left_residual'"),
                                        read_table(j.at("right_residual"), n,
                                                   n, "'right_residual'")}
                  : [&] {
                        ResidualTables tables =
                            derive_residuals(compose, poset);
                        return ResiduatedSemigroup{
                            std::move(poset), std::move(compose),
                            std::move(tables.lres), std::move(tables.rres)};
                    }();
        require_valid(validate_residuated_semigroup(rs), "residuated semigroup");
        out.rs = std::move(rs);
    } else if (kind == "jsl") {
        out.kind = AlgebraFile::Kind::Jsl;
        Table join = read_table(need(j, "join"), n, n, "'join'");
        JoinSemilatticeSemigroup alg{n, std::move(compose), std::move(join)};
        require_valid(validate_jsl(alg), "join semilattice-ordered semigroup");
        out.jsl = std::move(alg);
    } else {
        throw ParseError("unknown algebra kind '" + kind +
                         "' (expected \"rs\" or \"jsl\")");
    }
    return out;
}

std::string serialize_algebra(const AlgebraFile& a) {
    json j;
    j["elements"] = a.elements;
    if (a.kind == AlgebraFile::Kind::Rs) {
        if (!a.rs) throw InternalError("rs algebra file without rs payload");
        j["kind"] = "rs";
        j["compose"] = table_json(a.rs->compose);
        const int n = a.rs->poset.size();
        json order = json::array();
        for (int x = 0; x < n; ++x) {
            std::vector<int> row;
            for (int y = 0; y < n; ++y)
                row.push_back(a.rs->poset.leq(x, y) ? 1 : 0);
            order.push_back(row);
        }
        j["order"] = std::move(order);
        j["left_residual"] = table_json(a.rs->lres);
        j["right_residual"] = table_json(a.rs->rres);
    } else {
        if (!a.jsl) throw InternalError("jsl algebra file without jsl payload");
        j["kind"] = "jsl";
        j["compose"] = table_json(a.jsl->compose);
        j["join"] = table_json(a.jsl->join);
    }
    return dump(j);
}

std::string algebra_hash(const AlgebraFile& a) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : serialize_algebra(a)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string serialize_representation(const Representation& rep,
                                     const std::vector<std::string>& names) {
    if (names.size() != rep.map.size())
        throw InternalError(
            "element name list does not match the representation size");
    json j;
    j["base"] = rep.base.labels;
    json rels;
    for (std::size_t i = 0; i < rep.map.size(); ++i) {
        json pairs = json::array();
        for (auto [r, c] : rep.map[i].pairs())
            pairs.push_back(json::array({r, c}));
        rels[names[i]] = std::move(pairs);
    }
    j["relations"] = std::move(rels);
    return dump(j);
}

Representation parse_representation(const std::string& text,
                                    const std::vector<std::string>& names) {
    json j = parse_json(text);
    if (!j.is_object())
        throw ParseError("representation file must be a JSON object");
    const json& base = need(j, "base");
    if (!base.is_array())
        throw ParseError("'base' must be an array of point labels");
    Representation rep;
    rep.base.size = static_cast<int>(base.size());
    for (const json& lbl : base)
        rep.base.labels.push_back(need_string(lbl, "base point label"));

    const json& rels = need(j, "relations");
    if (!rels.is_object())
        throw ParseError("'relations' must map element names to pair lists");
    if (rels.size() != names.size())
        throw ParseError("'relations' must cover exactly the " +
                         std::to_string(names.size()) + " algebra elements");
    for (const std::string& name : names)
        if (!rels.contains(name))
            throw ParseError("'relations' lacks element '" + name + "'");

    for (const std::string& name : names) {
        const json& pairs = rels.at(name);
        if (!pairs.is_array())
            throw ParseError("relation for '" + name +
                             "' must be an array of [row, col] pairs");
        Rel r = Rel::empty(rep.base.size);
        std::pair<int, int> prev{-1, -1};
        for (const json& pj : pairs) {
            if (!pj.is_array() || pj.size() != 2)
                throw ParseError("relation pair for '" + name +
                                 "' must be [row, col]");
            int row = need_int(pj[0], "relation row");
            int col = need_int(pj[1], "relation column");
            if (row < 0 || row >= rep.base.size || col < 0 ||
                col >= rep.base.size)
                throw ParseError("relation pair (" + std::to_string(row) +
                                 "," + std::to_string(col) +
                                 ") outside the base for '" + name + "'");
            if (std::pair{row, col} <= prev)
                throw ParseError("relation pairs for '" + name +
                                 "' must be strictly sorted row-major");
            prev = {row, col};
            r.add(row, col);
        }
        rep.map.push_back(std::move(r));
    }
    return rep;
}

std::string serialize_verdicts(
    const AlgebraFile& a, int depth,
    const std::map<std::pair<int, int>, Verdict>& verdicts,
    bool include_certificates) {
    json j;
    j["algebra"] = algebra_hash(a);
    j["depth"] = depth;
    json goals = json::array();
    for (const auto& [goal, verdict] : verdicts) {
        json g;
        g["a"] = a.elements.at(goal.first);
        g["b"] = a.elements.at(goal.second);
        g["winner"] = verdict.winner == Winner::Forall ? "FORALL" : "EXISTS";
        if (include_certificates && verdict.winner == Winner::Forall) {
            if (!verdict.certificate)
                throw InternalError("FORALL verdict without a certificate");
            g["certificate"] = certificate_json(*verdict.certificate);
        }
        goals.push_back(std::move(g));
    }
    j["goals"] = std::move(goals);
    return dump(j);
}

VerdictFileData parse_verdicts(const std::string& text,
                               const std::vector<std::string>& names) {
    json j = parse_json(text);
    if (!j.is_object()) throw ParseError("verdict file must be a JSON object");
    VerdictFileData out;
    out.algebra = need_string(need(j, "algebra"), "'algebra'");
    out.depth = need_int(need(j, "depth"), "'depth'");
    const json& goals = need(j, "goals");
    if (!goals.is_array()) throw ParseError("'goals' must be an array");
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        throw ParseError("unknown element name '" + name +
                         "' in a goal pair");
    };
    for (const json& g : goals) {
        VerdictFileData::GoalVerdict gv;
        gv.a = index_of(need_string(need(g, "a"), "goal 'a'"));
        gv.b = index_of(need_string(need(g, "b"), "goal 'b'"));
        std::string w = need_string(need(g, "winner"), "'winner'");
        if (w == "FORALL")
            gv.winner = Winner::Forall;
        else if (w == "EXISTS")
            gv.winner = Winner::Exists;
        else
            throw ParseError("winner must be \"EXISTS\" or \"FORALL\", got '" +
                             w + "'");
        if (g.contains("certificate")) {
            if (gv.winner == Winner::Exists)
                throw ParseError(
                    "certificate attached to an EXISTS goal");
            gv.certificate = parse_certificate(g.at("certificate"));
        }
        out.goals.push_back(std::move(gv));
    }
    return out;
}

} // namespace finrep
