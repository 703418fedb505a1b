#include "cirel/command.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cirel/axioms.hpp"
#include "cirel/closure.hpp"
#include "cirel/complexity.hpp"
#include "cirel/dominance.hpp"
#include "cirel/errors.hpp"
#include "cirel/statements.hpp"

namespace cirel {

namespace {

MixedRepresentation load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    MixedRepresentation m = parse_statements(buf.str());
    if (m.ms().empty() && m.mu().empty()) throw Error("file contains no statements: " + path);
    return m;
}

nlohmann::ordered_json set_json(const Universe& uni, VarSet s) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    s.for_each([&](std::size_t i) { arr.push_back(uni.name(i)); });
    return arr;
}

nlohmann::ordered_json representation_json(const MixedRepresentation& m,
                                           const ClosureReport& report) {
    const Universe& uni = m.universe();
    nlohmann::ordered_json doc;
    doc["universe"] = nlohmann::ordered_json::array();
    for (const std::string& name : uni.names()) doc["universe"].push_back(name);
    for (const char* key : {"stable", "indep"}) {
        const Relation& rel = key == std::string_view("stable") ? m.ms() : m.mu();
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Triplet& t : rel) {
            nlohmann::ordered_json entry;
            entry["a"] = set_json(uni, t.a);
            entry["b"] = set_json(uni, t.b);
            entry["c"] = set_json(uni, t.c);
            arr.push_back(std::move(entry));
        }
        doc[key] = std::move(arr);
    }
    doc["report"] = {{"iterations", report.iterations},
                     {"cardMS", report.card_ms},
                     {"cardMU", report.card_mu},
                     {"elapsedMs", report.elapsed.count()}};
    return doc;
}

void print_representation(std::ostream& out, const MixedRepresentation& m) {
    const Universe& uni = m.universe();
    for (const Triplet& t : m.ms()) out << statement_line(uni, t) << "\n";
    for (const Triplet& t : m.mu()) out << statement_line(uni, t) << "\n";
}

int cmd_close(std::ostream& out, const std::string& file, const std::string& algorithm,
              bool step4, const std::string& format) {
    MixedRepresentation input = load_file(file);
    const Universe& uni = input.universe();

    MixedRepresentation result{Relation(uni), Relation(uni)};
    ClosureReport report;
    if (algorithm == "hybrid") {
        HybridResult h = hybrid_closure(input, step4);
        result = h.representation;
        report = h.report;
    } else if (algorithm == "star") {
        Relation seed(uni);
        if (!input.ms().empty()) {
            // Stable statements denote their whole conditioning-growth family;
            // materialize it so the one-tier algorithm sees equal semantics.
            for (const Triplet& t : stab_closure_bruteforce(input.ms())) seed.insert(t);
        }
        for (const Triplet& t : input.mu()) seed.insert(t);
        Relation closed = one_tier_closure(seed, &report);
        result = MixedRepresentation(Relation(uni), closed);
    } else {  // brute
        auto t0 = std::chrono::steady_clock::now();
        Relation closed = sem_closure_bruteforce(input);
        Relation dominant = maximal_elements(closed, DominanceKind::o_dominance);
        result = MixedRepresentation(Relation(uni), dominant);
        report.card_mu = dominant.size();
        report.elapsed = std::chrono::steady_clock::now() - t0;
    }

    if (format == "json") {
        out << representation_json(result, report).dump(2) << "\n";
    } else {
        print_representation(out, result);
    }
    return 0;
}

int cmd_oracle(std::ostream& out, const std::string& file) {
    MixedRepresentation input = load_file(file);
    Relation closed = sem_closure_bruteforce(input);
    for (const Triplet& t : closed) out << statement_line(input.universe(), t) << "\n";
    return 0;
}

int cmd_stable_part(std::ostream& out, const std::string& file) {
    MixedRepresentation input = load_file(file);
    Relation closed = sem_closure_bruteforce(input);
    StablePart sp = stable_part(closed);
    for (const Triplet& t : sp.part) out << statement_line(input.universe(), t) << "\n";
    out << "# ascending: " << (sp.ascending ? "yes" : "no") << "\n";
    return 0;
}

int cmd_complexity(std::ostream& out, const std::string& file, bool exact, std::size_t budget) {
    MixedRepresentation input = load_file(file);
    Relation closed = sem_closure_bruteforce(input);
    ComplexityReport report = complexity_upper_bounds(closed);
    out << "com_sem_upper: " << report.com_sem_upper << "\n";
    out << "com_strong_upper: " << report.com_strong_upper << "\n";
    if (!exact) return 0;

    ExactComplexity sem = exact_complexity(closed, ComplexityMode::sem, budget);
    ExactComplexity strong = exact_complexity(closed, ComplexityMode::strong, budget);
    auto line = [&](const char* label, const ExactComplexity& e) {
        out << label << ": ";
        if (e.value)
            out << *e.value << "\n";
        else
            out << "unknown (budget exhausted)" << "\n";
    };
    line("com_sem_exact", sem);
    line("com_strong_exact", strong);
    return (sem.budget_exhausted || strong.budget_exhausted) ? 2 : 0;
}

int cmd_verify(std::ostream& out, const std::string& file, std::size_t max_vars) {
    MixedRepresentation input = load_file(file);
    const Universe& uni = input.universe();
    if (uni.size() > max_vars)
        throw UniverseTooLarge("universe has " + std::to_string(uni.size()) +
                               " variables, above --max-vars " + std::to_string(max_vars));

    HybridResult h = hybrid_closure(input, false);
    Relation denoted(uni);
    for (const Triplet& t : expand(h.representation.ms(), DominanceKind::s_dominance, max_vars))
        denoted.insert(Triplet{t.a, t.b, t.c, Flavor::ordinary});
    for (const Triplet& t : expand(h.representation.mu(), DominanceKind::o_dominance, max_vars))
        denoted.insert(t);
    Relation oracle = sem_closure_bruteforce(input, max_vars);

    bool ok = true;
    for (const Triplet& t : oracle) {
        if (!denoted.contains(t)) {
            if (ok) out << "FAIL\n";
            ok = false;
            out << "witness missing: " << statement_line(uni, t) << "\n";
        }
    }
    for (const Triplet& t : denoted) {
        if (!oracle.contains(t)) {
            if (ok) out << "FAIL\n";
            ok = false;
            out << "witness extra: " << statement_line(uni, t) << "\n";
        }
    }
    if (!ok) return 3;
    out << "PASS\n";
    return 0;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CommandResult result;
    std::ostringstream out, err;

    CLI::App app{"compact conditional-independence representations"};
    app.name("cirel");
    app.require_subcommand(1);

    std::string file, algorithm = "hybrid", format = "text";
    bool step4 = false, exact = false;
    std::size_t budget = kDefaultComplexityBudget;
    std::size_t max_vars = kDefaultOracleGuard;

    CLI::App* close = app.add_subcommand("close", "compute a compact closure representation");
    close->add_option("file", file, "statement file")->required();
    close->add_option("--algorithm", algorithm, "hybrid, star, or brute")
        ->check(CLI::IsMember({"hybrid", "star", "brute"}));
    close->add_flag("--step4", step4, "also shrink stable conditioning sets (hybrid only)");
    close->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* oracle = app.add_subcommand("oracle", "list the full brute-force closure");
    oracle->add_option("file", file, "statement file")->required();

    CLI::App* stable_part_cmd =
        app.add_subcommand("stable-part", "list the stable part of the closure");
    stable_part_cmd->add_option("file", file, "statement file")->required();

    CLI::App* complexity = app.add_subcommand("complexity", "representation complexity measures");
    complexity->add_option("file", file, "statement file")->required();
    complexity->add_flag("--exact", exact, "exhaustive minimum search");
    complexity->add_option("--budget", budget, "closure evaluations allowed for --exact");

    CLI::App* verify = app.add_subcommand("verify", "check the output against the oracle");
    verify->add_option("file", file, "statement file")->required();
    verify->add_option("--max-vars", max_vars, "largest universe the oracle will enumerate");

    std::vector<const char*> argv;
    argv.push_back("cirel");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        result.exit_code = code == 0 ? 0 : 1;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    try {
        if (app.got_subcommand(close)) {
            result.exit_code = cmd_close(out, file, algorithm, step4, format);
        } else if (app.got_subcommand(oracle)) {
            result.exit_code = cmd_oracle(out, file);
        } else if (app.got_subcommand(stable_part_cmd)) {
            result.exit_code = cmd_stable_part(out, file);
        } else if (app.got_subcommand(complexity)) {
            result.exit_code = cmd_complexity(out, file, exact, budget);
        } else if (app.got_subcommand(verify)) {
            result.exit_code = cmd_verify(out, file, max_vars);
        }
    } catch (const UniverseTooLarge& e) {
        err << "error: " << e.what() << "\n";
        result.exit_code = 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        result.exit_code = 1;
    }

    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace cirel
