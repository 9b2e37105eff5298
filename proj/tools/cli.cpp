// Command-line driver for the finrep pipeline: validation, representation
// construction and checking, representability games, and the axiom schema.
//
// Exit codes: 0 success, 1 validation failure, 2 malformed input, 3 budget
// or cap exhausted, 4 internal invariant breach.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "finrep/algebra.hpp"
#include "finrep/enumerate.hpp"
#include "finrep/errors.hpp"
#include "finrep/formula.hpp"
#include "finrep/games.hpp"
#include "finrep/io.hpp"
#include "finrep/relational.hpp"

using namespace finrep;

namespace {

// Emission and evaluation of the axiom schema are capped: each round
// multiplies the sentence size (rho_4 already prints at ~6.5 MB).
constexpr int kMaxAxiomRounds = 4;
// Exhaustive enumeration beyond this carrier size is out of desk range.
constexpr int kMaxEnumerateSize = 4;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in.good())
        throw ParseError("cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out.good())
        throw InternalError("cannot open output file '" + path + "'");
    out << text;
    if (!out.good())
        throw InternalError("write to '" + path + "' failed");
}

AlgebraFile load_algebra(const std::string& path) {
    return parse_algebra(slurp(path));
}

// View the file's algebra as a residuated semigroup.  A join
// semilattice-ordered semigroup qualifies when its composition is residuated
// with respect to the join-induced order.
ResiduatedSemigroup as_rs(const AlgebraFile& a) {
    if (a.kind == AlgebraFile::Kind::Rs) return *a.rs;
    FinitePoset poset = order_from_join(a.jsl->join);
    ResidualTables rt = derive_residuals(a.jsl->compose, poset);
    return ResiduatedSemigroup{std::move(poset), a.jsl->compose,
                               std::move(rt.lres), std::move(rt.rres)};
}

// View the file's algebra as a join semilattice-ordered semigroup.  A
// residuated semigroup qualifies when its order has all binary joins and
// composition distributes over them.
JoinSemilatticeSemigroup as_jsl(const AlgebraFile& a) {
    if (a.kind == AlgebraFile::Kind::Jsl) return *a.jsl;
    const FinitePoset& poset = a.rs->poset;
    const int n = poset.size();
    Table join(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int least = -1;
            for (int c = 0; c < n; ++c) {
                if (!poset.leq(x, c) || !poset.leq(y, c)) continue;
                if (least == -1 || poset.leq(c, least)) least = c;
            }
            if (least == -1)
                throw InvalidSemilattice("elements " + std::to_string(x) +
                                         " and " + std::to_string(y) +
                                         " have no upper bound");
            for (int c = 0; c < n; ++c)
                if (poset.leq(x, c) && poset.leq(y, c) && !poset.leq(least, c))
                    throw InvalidSemilattice(
                        "elements " + std::to_string(x) + " and " +
                        std::to_string(y) + " have no least upper bound");
            join[x][y] = least;
        }
    }
    JoinSemilatticeSemigroup alg{n, a.rs->compose, std::move(join)};
    ValidationReport report = validate_jsl(alg);
    if (!report.ok())
        throw ValidationError(
            "the order does not make composition join-distributive: " +
            report.summary());
    return alg;
}

int element_index(const AlgebraFile& a, const std::string& name) {
    for (std::size_t i = 0; i < a.elements.size(); ++i)
        if (a.elements[i] == name) return static_cast<int>(i);
    throw ParseError("no element named '" + name + "' in this algebra");
}

void print_report(const ValidationReport& report, std::ostream& os) {
    for (const auto& v : report.violations) {
        os << "violation: " << v.law << " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            if (i) os << ",";
            os << v.witness[i];
        }
        os << ")";
        if (!v.detail.empty()) os << ": " << v.detail;
        os << "\n";
    }
    for (const std::string& note : report.notes) os << "note: " << note << "\n";
}

void require_rounds_in_cap(int rounds) {
    if (rounds < 0) throw MalformedInput("rounds must be nonnegative");
    if (rounds > kMaxAxiomRounds)
        throw DepthCapExceeded("axiom schema emission is capped at " +
                               std::to_string(kMaxAxiomRounds) + " rounds");
}

// ---- subcommand bodies ----------------------------------------------------

int run_validate(const std::string& file) {
    AlgebraFile a = load_algebra(file);
    std::cout << (a.kind == AlgebraFile::Kind::Rs
                      ? "residuated semigroup"
                      : "join semilattice-ordered semigroup")
              << ", " << a.size() << " element"
              << (a.size() == 1 ? "" : "s") << "\n";
    std::cout << "hash " << algebra_hash(a) << "\n";
    std::cout << "valid\n";
    return 0;
}

int run_represent(const std::string& file, const std::string& out,
                  bool min_generators) {
    AlgebraFile a = load_algebra(file);
    Representation rep = represent(as_rs(a), min_generators);
    emit(out, serialize_representation(rep, a.elements));
    return 0;
}

int run_verify(const std::string& algebra_file, const std::string& rep_file) {
    AlgebraFile a = load_algebra(algebra_file);
    ResiduatedSemigroup rs = as_rs(a);
    Representation rep = parse_representation(slurp(rep_file), a.elements);
    ValidationReport report = verify_representation(rs, rep);
    print_report(report, std::cout);
    if (report.ok()) {
        std::cout << "ok\n";
        return 0;
    }
    std::cout << "verification failed: " << report.violations.size()
              << " violation(s)\n";
    return 1;
}

int run_game(const std::string& file, int rounds, const std::string& goal,
             const std::string& cert_out) {
    AlgebraFile a = load_algebra(file);
    JoinSemilatticeSemigroup alg = as_jsl(a);
    std::map<std::pair<int, int>, Verdict> verdicts;
    if (!goal.empty()) {
        auto comma = goal.find(',');
        if (comma == std::string::npos)
            throw ParseError("--goal wants two comma-separated element names");
        GoalPair g{element_index(a, goal.substr(0, comma)),
                   element_index(a, goal.substr(comma + 1))};
        verdicts[{g.a, g.b}] = solve_game(alg, rounds, g);
    } else {
        verdicts = solve_game_all(alg, rounds);
    }
    std::cout << serialize_verdicts(a, rounds, verdicts, false);
    if (!cert_out.empty())
        emit(cert_out, serialize_verdicts(a, rounds, verdicts, true));
    return 0;
}

int run_axioms(int rounds, const std::string& out) {
    require_rounds_in_cap(rounds);
    std::string text;
    for (int n = 0; n <= rounds; ++n) {
        text += "# rho_" + std::to_string(n) + "\n";
        text += print_formula(emit_rho(n));
        text += "\n";
    }
    emit(out, text);
    return 0;
}

int run_eval_axiom(const std::string& file, int rounds) {
    require_rounds_in_cap(rounds);
    AlgebraFile a = load_algebra(file);
    JoinSemilatticeSemigroup alg = as_jsl(a);
    std::cout << (eval_formula(emit_rho(rounds), alg) ? "true" : "false")
              << "\n";
    return 0;
}

int run_enumerate(const std::string& kind, int size, bool modulo_iso,
                  const std::string& out_dir) {
    std::vector<std::string> names;
    for (int i = 0; i < size; ++i) names.push_back(std::to_string(i));
    int count = 0;
    auto file_for = [&](int index) {
        std::ostringstream name;
        name << kind << size << "_" << std::setw(5) << std::setfill('0')
             << index << ".json";
        return (std::filesystem::path(out_dir) / name.str()).string();
    };
    if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
    if (kind == "rs") {
        enumerate_rs(
            size, modulo_iso,
            [&](const ResiduatedSemigroup& rs) {
                ++count;
                if (out_dir.empty()) return;
                AlgebraFile a;
                a.kind = AlgebraFile::Kind::Rs;
                a.elements = names;
                a.rs = rs;
                emit(file_for(count), serialize_algebra(a));
            },
            kMaxEnumerateSize);
    } else {
        enumerate_jsl(
            size, modulo_iso,
            [&](const JoinSemilatticeSemigroup& alg) {
                ++count;
                if (out_dir.empty()) return;
                AlgebraFile a;
                a.kind = AlgebraFile::Kind::Jsl;
                a.elements = names;
                a.jsl = alg;
                emit(file_for(count), serialize_algebra(a));
            },
            kMaxEnumerateSize);
    }
    std::cout << count << "\n";
    return 0;
}

int run_extract(const std::string& file, int nodes, int rounds,
                const std::string& out) {
    AlgebraFile a = load_algebra(file);
    JoinSemilatticeSemigroup alg = as_jsl(a);
    auto [rep, report] = saturate_and_extract_rep(alg, nodes, rounds);
    emit(out, serialize_representation(rep, a.elements));
    print_report(report, std::cerr);
    if (report.ok()) {
        std::cerr << "extraction report: ok\n";
        return 0;
    }
    std::cerr << "extraction report: " << report.violations.size()
              << " violation(s)\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "finrep: finite representability toolkit for residuated semigroups "
        "and join semilattice-ordered semigroups"};
    app.require_subcommand(1);

    std::string file, out, goal, cert_out, rep_file, kind;
    int rounds = 0, size = 0, nodes = 0;
    bool min_generators = false, modulo_iso = false;

    auto* validate =
        app.add_subcommand("validate", "Parse an algebra file and check the "
                                       "algebra laws");
    validate->add_option("file", file, "algebra file (- for stdin)")
        ->required();

    auto* represent_cmd = app.add_subcommand(
        "represent", "Build the relational representation of an algebra");
    represent_cmd->add_option("file", file, "algebra file (- for stdin)")
        ->required();
    represent_cmd->add_option("-o,--output", out, "representation file");
    represent_cmd->add_flag("--min-generators", min_generators,
                            "shrink the generator set before building");

    auto* verify = app.add_subcommand(
        "verify", "Check a representation file against its algebra");
    verify->add_option("algebra", file, "algebra file (- for stdin)")
        ->required();
    verify->add_option("representation", rep_file, "representation file")
        ->required();

    auto* game = app.add_subcommand(
        "game", "Solve the bounded representability game on an algebra");
    game->add_option("file", file, "algebra file (- for stdin)")->required();
    game->add_option("--rounds", rounds, "game depth")->required();
    game->add_option("--goal", goal,
                     "restrict to one goal: two element names, comma-separated");
    game->add_option("--certificates", cert_out,
                     "also write the verdicts with certificate trees here");

    auto* axioms = app.add_subcommand(
        "axioms", "Pretty-print the axiom schema rho_0..rho_N");
    axioms->add_option("--rounds", rounds, "largest round to emit")
        ->required();
    axioms->add_option("-o,--output", out, "output file");

    auto* eval_axiom = app.add_subcommand(
        "eval-axiom", "Evaluate the round-N axiom on an algebra");
    eval_axiom->add_option("file", file, "algebra file (- for stdin)")
        ->required();
    eval_axiom->add_option("--rounds", rounds, "round to evaluate")
        ->required();

    auto* enumerate = app.add_subcommand(
        "enumerate", "Enumerate all algebras of a given size");
    enumerate->add_option("--kind", kind, "rs or jsl")
        ->required()
        ->check(CLI::IsMember({"rs", "jsl"}));
    enumerate->add_option("--size", size, "carrier size")->required();
    enumerate->add_flag("--modulo-iso", modulo_iso,
                        "one representative per isomorphism class");
    enumerate->add_option("-o,--output", out,
                          "directory for one algebra file per structure");

    auto* extract = app.add_subcommand(
        "extract-rep", "Run budgeted game saturation and extract a candidate "
                       "representation");
    extract->add_option("file", file, "algebra file (- for stdin)")
        ->required();
    extract->add_option("--nodes", nodes, "node budget")->required();
    extract->add_option("--rounds", rounds, "round budget")->required();
    extract->add_option("-o,--output", out, "representation file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help lands here too and must stay exit 0; genuine usage errors
        // fold into the malformed-input exit code.
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate)) return run_validate(file);
        if (app.got_subcommand(represent_cmd))
            return run_represent(file, out, min_generators);
        if (app.got_subcommand(verify)) return run_verify(file, rep_file);
        if (app.got_subcommand(game))
            return run_game(file, rounds, goal, cert_out);
        if (app.got_subcommand(axioms)) return run_axioms(rounds, out);
        if (app.got_subcommand(eval_axiom))
            return run_eval_axiom(file, rounds);
        if (app.got_subcommand(enumerate))
            return run_enumerate(kind, size, modulo_iso, out);
        if (app.got_subcommand(extract))
            return run_extract(file, nodes, rounds, out);
        throw InternalError("no subcommand dispatched");
    } catch (const Error& e) {
        std::string msg = e.what();
        while (!msg.empty() && msg.back() == '\n') msg.pop_back();
        std::cerr << "error: " << msg << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
