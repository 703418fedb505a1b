#include "cirel/statements.hpp"

#include <optional>
#include <vector>

#include "cirel/errors.hpp"

namespace cirel {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        std::size_t pos = s.find(sep);
        if (pos == std::string_view::npos) {
            out.push_back(s);
            return out;
        }
        out.push_back(s.substr(0, pos));
        s.remove_prefix(pos + 1);
    }
}

VarSet parse_set(const Universe& uni, std::string_view text, std::size_t line) {
    VarSet out{};
    for (std::string_view token : split(text, ',')) {
        token = trim(token);
        if (token.empty()) throw ParseError(line, "empty name in set");
        if (!uni.has(token)) throw ParseError(line, "unknown variable: " + std::string(token));
        out = out.with(uni.index_of(token));
    }
    return out;
}

}  // namespace

MixedRepresentation parse_statements(std::string_view text) {
    std::optional<Universe> uni;
    std::optional<Relation> ms, mu;

    std::size_t line_no = 0;
    for (std::string_view line : split(text, '\n')) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        std::size_t space = line.find_first_of(" \t");
        std::string_view keyword = line.substr(0, space);
        std::string_view rest =
            space == std::string_view::npos ? std::string_view{} : trim(line.substr(space + 1));

        if (keyword == "vars") {
            if (uni) throw ParseError(line_no, "duplicate vars line");
            std::vector<std::string> names;
            for (std::string_view token : split(rest, ',')) {
                token = trim(token);
                names.emplace_back(token);
            }
            if (rest.empty()) throw ParseError(line_no, "vars line needs at least one name");
            try {
                uni.emplace(std::move(names));
            } catch (const Error& e) {
                throw ParseError(line_no, e.what());
            }
            ms.emplace(*uni);
            mu.emplace(*uni);
            continue;
        }

        if (keyword != "indep" && keyword != "stable")
            throw ParseError(line_no, "unknown keyword: " + std::string(keyword));
        if (!uni) throw ParseError(line_no, "statement before vars line");

        std::vector<std::string_view> sides = split(rest, ';');
        if (sides.size() != 2)
            throw ParseError(line_no, "statement needs exactly one ';'");
        std::string_view second = sides[1];
        VarSet c{};
        std::size_t bar = second.find('|');
        if (bar != std::string_view::npos) {
            c = parse_set(*uni, trim(second.substr(bar + 1)), line_no);
            second = second.substr(0, bar);
        }
        VarSet a = parse_set(*uni, trim(sides[0]), line_no);
        VarSet b = parse_set(*uni, trim(second), line_no);

        bool stable = keyword == "stable";
        Triplet t;
        try {
            t = make_triplet(a, b, c, stable ? Flavor::stable : Flavor::ordinary);
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
        if (stable)
            ms->insert(t);
        else
            mu->insert(t);
    }

    // The vars line must come before anything else, so line 1 is the offence.
    if (!uni) throw ParseError(1, "missing vars line");
    return MixedRepresentation(std::move(*ms), std::move(*mu));
}

std::string set_to_names(const Universe& universe, VarSet s) {
    std::string out;
    s.for_each([&](std::size_t i) {
        if (!out.empty()) out += ',';
        out += universe.name(i);
    });
    return out;
}

std::string statement_line(const Universe& universe, const Triplet& t) {
    std::string out = t.flavor == Flavor::stable ? "stable " : "indep ";
    out += set_to_names(universe, t.a);
    out += " ; ";
    out += set_to_names(universe, t.b);
    if (!t.c.empty()) {
        out += " | ";
        out += set_to_names(universe, t.c);
    }
    return out;
}

std::string format_statements(const MixedRepresentation& m) {
    std::string out = "vars ";
    const Universe& uni = m.universe();
    for (std::size_t i = 0; i < uni.size(); ++i) {
        if (i > 0) out += ',';
        out += uni.name(i);
    }
    out += '\n';
    for (const Triplet& t : m.ms()) out += statement_line(uni, t) + "\n";
    for (const Triplet& t : m.mu()) out += statement_line(uni, t) + "\n";
    return out;
}

}  // namespace cirel
