#include "projhom/algfile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace projhom {

namespace {

struct Token {
    std::string text;
    int column; // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

long parse_long(const Token& tok, int line) {
    try {
        std::size_t used = 0;
        long v = std::stol(tok.text, &used);
        if (used != tok.text.size())
            throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParseError(ParseError::Kind::Syntax, line, tok.column,
                         "expected an integer, got '" + tok.text + "'");
    }
}

// "3", "-2", "1/2", "-3/4"
std::pair<long, long> parse_coefficient(const Token& tok, int line) {
    auto slash = tok.text.find('/');
    if (slash == std::string::npos)
        return {parse_long(tok, line), 1};
    Token num{tok.text.substr(0, slash), tok.column};
    Token den{tok.text.substr(slash + 1), tok.column + static_cast<int>(slash) + 1};
    long d = parse_long(den, line);
    if (d == 0)
        throw ParseError(ParseError::Kind::Syntax, line, den.column,
                         "zero denominator in coefficient");
    return {parse_long(num, line), d};
}

} // namespace

AlgebraSpecFile parse_algebra_text(const std::string& text) {
    AlgebraSpecFile spec;
    bool have_field = false;
    int line_no = 0;
    int last_line = 0;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        last_line = line_no;
        auto toks = tokenize(line);
        if (toks.empty())
            continue;
        const std::string& kw = toks[0].text;

        auto need = [&](std::size_t count, const char* what) {
            if (toks.size() != count)
                throw ParseError(ParseError::Kind::Syntax, line_no,
                                 toks.size() > count ? toks[count].column
                                                     : static_cast<int>(line.size()) + 1,
                                 std::string("expected ") + what);
        };

        if (kw == "field") {
            if (have_field)
                throw ParseError(ParseError::Kind::Syntax, line_no, toks[0].column,
                                 "duplicate field directive");
            if (toks.size() == 2 && toks[1].text == "Q") {
                spec.characteristic = 0;
            } else if (toks.size() == 3 && toks[1].text == "F") {
                long p = parse_long(toks[2], line_no);
                if (!is_prime(p))
                    throw ParseError(ParseError::Kind::Syntax, line_no, toks[2].column,
                                     "field modulus must be prime");
                spec.characteristic = p;
            } else {
                throw ParseError(ParseError::Kind::Syntax, line_no, toks[0].column,
                                 "expected 'field Q' or 'field F <p>'");
            }
            have_field = true;
        } else if (kw == "vertex") {
            need(2, "'vertex <label>'");
            if (std::find(spec.vertices.begin(), spec.vertices.end(), toks[1].text) !=
                spec.vertices.end())
                throw ParseError(ParseError::Kind::Syntax, line_no, toks[1].column,
                                 "duplicate vertex '" + toks[1].text + "'");
            spec.vertices.push_back(toks[1].text);
        } else if (kw == "arrow") {
            need(4, "'arrow <name> <source> <target>'");
            for (const auto& [n, s, t] : spec.arrows)
                if (n == toks[1].text)
                    throw ParseError(ParseError::Kind::Syntax, line_no, toks[1].column,
                                     "duplicate arrow '" + toks[1].text + "'");
            for (int k : {2, 3})
                if (std::find(spec.vertices.begin(), spec.vertices.end(), toks[k].text) ==
                    spec.vertices.end())
                    throw ParseError(ParseError::Kind::DanglingArrowEndpoint, line_no,
                                     toks[k].column,
                                     "arrow endpoint '" + toks[k].text +
                                         "' is not a declared vertex");
            spec.arrows.emplace_back(toks[1].text, toks[2].text, toks[3].text);
        } else if (kw == "relation") {
            if (toks.size() < 2)
                throw ParseError(ParseError::Kind::Syntax, line_no, toks[0].column,
                                 "empty relation");
            RelationSpec rel;
            std::size_t i = 1;
            while (i < toks.size()) {
                RelationTermSpec term;
                term.line = line_no;
                term.column = toks[i].column;
                auto [num, den] = parse_coefficient(toks[i], line_no);
                term.num = num;
                term.den = den;
                ++i;
                if (i >= toks.size() || toks[i].text != "*")
                    throw ParseError(ParseError::Kind::Syntax, line_no,
                                     i < toks.size() ? toks[i].column
                                                     : static_cast<int>(line.size()) + 1,
                                     "expected '*' after the coefficient");
                ++i;
                while (i < toks.size() && toks[i].text != "+") {
                    bool known = false;
                    for (const auto& [n, s, t] : spec.arrows)
                        if (n == toks[i].text)
                            known = true;
                    if (!known)
                        throw ParseError(ParseError::Kind::UnknownField, line_no,
                                         toks[i].column,
                                         "unknown arrow '" + toks[i].text + "' in relation");
                    term.arrow_names.push_back(toks[i].text);
                    ++i;
                }
                if (term.arrow_names.size() < 2)
                    throw ParseError(ParseError::Kind::NonAdmissible, line_no, term.column,
                                     "relation term has length " +
                                         std::to_string(term.arrow_names.size()) +
                                         "; admissible relations need length >= 2");
                rel.terms.push_back(std::move(term));
                if (i < toks.size() && toks[i].text == "+")
                    ++i; // next term
            }
            spec.relations.push_back(std::move(rel));
        } else if (kw == "cap") {
            need(3, "'cap path-length <n>' or 'cap resolution <n>'");
            long v = parse_long(toks[2], line_no);
            if (v <= 0)
                throw ParseError(ParseError::Kind::Syntax, line_no, toks[2].column,
                                 "cap must be positive");
            if (toks[1].text == "path-length")
                spec.path_length_cap = static_cast<std::size_t>(v);
            else if (toks[1].text == "resolution")
                spec.resolution_cutoff = static_cast<std::size_t>(v);
            else
                throw ParseError(ParseError::Kind::UnknownField, line_no, toks[1].column,
                                 "unknown cap '" + toks[1].text + "'");
        } else {
            throw ParseError(ParseError::Kind::UnknownField, line_no, toks[0].column,
                             "unknown directive '" + kw + "'");
        }
    }

    if (!have_field)
        throw ParseError(ParseError::Kind::Syntax, last_line + 1, 1,
                         "missing 'field' directive");
    if (spec.vertices.empty())
        throw ParseError(ParseError::Kind::Syntax, last_line + 1, 1, "no vertices declared");
    return spec;
}

AlgebraSpecFile parse_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open algebra file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_algebra_text(buffer.str());
}

AlgebraPtr realize(const AlgebraSpecFile& spec) {
    Quiver quiver(spec.vertices, spec.arrows);
    long ch = spec.characteristic;

    std::vector<Relation> relations;
    for (const auto& rel : spec.relations) {
        Relation r;
        for (const auto& term : rel.terms) {
            Scalar coeff = Scalar::of_int(term.num, ch);
            if (term.den != 1)
                coeff = coeff * Scalar::of_int(term.den, ch).inverse();
            // written in function order: the first name is applied last
            Path p;
            p.arrows.reserve(term.arrow_names.size());
            for (auto it = term.arrow_names.rbegin(); it != term.arrow_names.rend(); ++it)
                p.arrows.push_back(quiver.arrow_index(*it));
            int at = quiver.arrow(p.arrows.front()).source;
            p.source = at;
            for (int a : p.arrows) {
                if (quiver.arrow(a).source != at)
                    throw ParseError(ParseError::Kind::Syntax, term.line, term.column,
                                     "relation path does not compose");
                at = quiver.arrow(a).target;
            }
            p.target = at;
            r.terms.emplace_back(coeff, std::move(p));
        }
        relations.push_back(std::move(r));
    }

    AlgebraOptions opts;
    opts.path_length_cap = spec.path_length_cap;
    return build_algebra(std::move(quiver), ch, std::move(relations), opts);
}

} // namespace projhom
