#include <sigfix/io.hpp>

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace sigfix {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                         message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

using Kind = ParseError::Kind;

struct Token {
    std::string_view text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

// Non-empty lines with comments stripped; ':' and '|' are tokens of their own.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            char c = raw[i];
            if (c == ' ' || c == '\t' || c == '\r') {
                ++i;
            } else if (c == ':' || c == '|') {
                line.tokens.push_back({raw.substr(i, 1), i + 1});
                ++i;
            } else {
                std::size_t j = i;
                while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r' && raw[j] != ':' &&
                       raw[j] != '|') {
                    ++j;
                }
                line.tokens.push_back({raw.substr(i, j - i), i + 1});
                i = j;
            }
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        pos = end + 1;
    }
    return lines;
}

constexpr std::size_t max_order = 1'000'000;

std::size_t parse_count(const Line& line, const Token& t, Kind kind, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw ParseError(kind, line.number, t.column, std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
    }
    return value;
}

std::size_t parse_header(const std::vector<Line>& lines, std::string_view keyword) {
    if (lines.empty()) throw ParseError(Kind::header, 1, 1, "missing '" + std::string(keyword) + " <n>' header");
    const Line& h = lines.front();
    if (h.tokens[0].text != keyword) {
        throw ParseError(Kind::header, h.number, h.tokens[0].column,
                         "expected header '" + std::string(keyword) + " <n>', got '" + std::string(h.tokens[0].text) + "'");
    }
    if (h.tokens.size() != 2) {
        throw ParseError(Kind::header, h.number, h.tokens[0].column,
                         "header must be '" + std::string(keyword) + " <n>'");
    }
    std::size_t n = parse_count(h, h.tokens[1], Kind::header, "a vertex count");
    if (n > max_order) throw ParseError(Kind::header, h.number, h.tokens[1].column, "vertex count too large");
    return n;
}

Vertex parse_vertex(const Line& line, const Token& t, std::size_t n) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v < 1 || v > n) {
        throw ParseError(Kind::vertex, line.number, t.column,
                         "bad vertex id '" + std::string(t.text) + "', expected 1.." + std::to_string(n));
    }
    return static_cast<Vertex>(v);
}

}  // namespace

TextFormat detect_format(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(Kind::header, 1, 1, "empty input");
    auto kw = lines.front().tokens[0].text;
    if (kw == "sdigraph") return TextFormat::sdigraph;
    if (kw == "boolnet") return TextFormat::boolnet;
    if (kw == "digraph") return TextFormat::digraph;
    throw ParseError(Kind::header, lines.front().number, lines.front().tokens[0].column,
                     "unknown format '" + std::string(kw) + "'");
}

SignedDigraph parse_graph(std::string_view text) {
    auto lines = tokenize(text);
    const std::size_t n = parse_header(lines, "sdigraph");
    std::vector<Arc> arcs;
    std::map<Arc, std::size_t> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens.size() != 3) {
            throw ParseError(Kind::syntax, l.number, l.tokens[0].column, "expected '<u> <v> <+|->'");
        }
        Arc a{parse_vertex(l, l.tokens[0], n), parse_vertex(l, l.tokens[1], n), Sign::positive};
        auto s = l.tokens[2].text;
        if (s == "-") {
            a.sign = Sign::negative;
        } else if (s != "+") {
            throw ParseError(Kind::syntax, l.number, l.tokens[2].column, "sign must be '+' or '-', got '" + std::string(s) + "'");
        }
        if (auto [it, fresh] = seen.emplace(a, l.number); !fresh) {
            throw ParseError(Kind::duplicate_arc, l.number, l.tokens[0].column,
                             "duplicate arc " + to_string(a) + " (first on line " + std::to_string(it->second) + ")");
        }
        arcs.push_back(a);
    }
    return SignedDigraph(n, std::move(arcs));
}

std::string format_graph(const SignedDigraph& g) {
    if (!g.is_full()) throw std::invalid_argument("format_graph: graph must be on all of 1..n");
    std::ostringstream out;
    out << "sdigraph " << g.order() << '\n';
    for (const auto& a : g.arcs()) out << a.source << ' ' << a.target << ' ' << to_char(a.sign) << '\n';
    return out.str();
}

BooleanNetwork parse_network(std::string_view text) {
    auto lines = tokenize(text);
    const std::size_t n = parse_header(lines, "boolnet");
    std::vector<LocalFunction> locals;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        const auto& t = l.tokens;
        Vertex v = parse_vertex(l, t[0], n);
        if (static_cast<std::size_t>(v) != locals.size() + 1) {
            throw ParseError(Kind::vertex, l.number, t[0].column,
                             "expected the line of vertex " + std::to_string(locals.size() + 1) + ", got " +
                                 std::to_string(v));
        }
        if (t.size() < 3 || t[1].text != ":") throw ParseError(Kind::syntax, l.number, t[0].column, "expected '<v> : <inputs> | <table>'");
        std::size_t bar = 2;
        while (bar < t.size() && t[bar].text != "|") ++bar;
        if (bar + 2 != t.size()) {
            throw ParseError(Kind::syntax, l.number, t[0].column, "expected '| <table>' at the end of the line");
        }
        std::vector<Vertex> inputs;
        std::set<Vertex> distinct;
        for (std::size_t j = 2; j < bar; ++j) {
            Vertex u = parse_vertex(l, t[j], n);
            if (!distinct.insert(u).second) {
                throw ParseError(Kind::vertex, l.number, t[j].column, "input " + std::to_string(u) + " repeated");
            }
            inputs.push_back(u);
        }
        const Token& tab = t[bar + 1];
        if (inputs.size() > LocalFunction::max_arity) {
            throw ParseError(Kind::table_length, l.number, tab.column, "too many inputs");
        }
        std::vector<bool> table;
        for (std::size_t j = 0; j < tab.text.size(); ++j) {
            char c = tab.text[j];
            if (c != '0' && c != '1') {
                throw ParseError(Kind::syntax, l.number, tab.column + j, "truth table may only contain 0 and 1");
            }
            table.push_back(c == '1');
        }
        const std::size_t expected = std::size_t{1} << inputs.size();
        if (table.size() != expected) {
            throw ParseError(Kind::table_length, l.number, tab.column,
                             "truth table has length " + std::to_string(table.size()) + ", expected " +
                                 std::to_string(expected) + " for " + std::to_string(inputs.size()) + " inputs");
        }
        locals.emplace_back(std::move(inputs), table);
    }
    if (locals.size() != n) {
        std::size_t last = lines.empty() ? 1 : lines.back().number;
        throw ParseError(Kind::vertex, last, 1, "missing the line of vertex " + std::to_string(locals.size() + 1));
    }
    return BooleanNetwork(std::move(locals));
}

std::string format_network(const BooleanNetwork& f) {
    std::ostringstream out;
    out << "boolnet " << f.size() << '\n';
    for (std::size_t v = 1; v <= f.size(); ++v) {
        const auto& lf = f.local(static_cast<Vertex>(v));
        out << v << " :";
        for (Vertex u : lf.inputs()) out << ' ' << u;
        out << " | " << lf.table_string() << '\n';
    }
    return out.str();
}

Digraph parse_digraph(std::string_view text) {
    auto lines = tokenize(text);
    const std::size_t n = parse_header(lines, "digraph");
    std::vector<std::pair<Vertex, Vertex>> arcs;
    std::map<std::pair<Vertex, Vertex>, std::size_t> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens.size() != 2) throw ParseError(Kind::syntax, l.number, l.tokens[0].column, "expected '<u> <v>'");
        auto a = std::make_pair(parse_vertex(l, l.tokens[0], n), parse_vertex(l, l.tokens[1], n));
        if (auto [it, fresh] = seen.emplace(a, l.number); !fresh) {
            throw ParseError(Kind::duplicate_arc, l.number, l.tokens[0].column,
                             "duplicate arc " + std::to_string(a.first) + "->" + std::to_string(a.second) +
                                 " (first on line " + std::to_string(it->second) + ")");
        }
        arcs.push_back(a);
    }
    return Digraph(n, std::move(arcs));
}

std::string format_digraph(const Digraph& d) {
    std::ostringstream out;
    out << "digraph " << d.order() << '\n';
    for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

nlohmann::ordered_json length_json(Length l) {
    if (l.is_infinite()) return "inf";
    return l.value();
}

nlohmann::ordered_json rule_json(const RuleVerdict& v) {
    nlohmann::ordered_json j;
    j["holds"] = v.holds;
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : v.witnesses) {
        j["witnesses"].push_back({{"cycle", w.cycle.to_string()}, {"arc", to_string(w.arc)}, {"vertex", w.vertex}});
    }
    if (v.violated_by) j["violated_by"] = v.violated_by->to_string();
    return j;
}

}  // namespace

std::string to_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["format"] = "sigfix-analysis";
    j["version"] = 1;
    j["n"] = r.n;
    j["tau_plus"] = r.tau_plus;
    j["tau_tilde_plus"] = r.tau_tilde_plus;
    j["g_plus"] = length_json(r.g_plus);
    j["g_tilde_plus"] = length_json(r.g_tilde_plus);
    j["thm3"] = r.thm3.holds;
    j["thm4"] = r.thm4.holds;
    j["thm5"] = r.thm5.holds;
    j["nofp_condition"] = r.nofp_condition;
    j["twofp_condition"] = r.twofp_condition;
    j["fp_upper_bound"] = r.fp_upper_bound;
    j["tau_tilde_set"] = r.tau_tilde_set;
    j["unique_positive_strong"] = r.unique_positive_strong;
    j["unique_negative_strong"] = r.unique_negative_strong;
    j["rules"] = {{"thm3", rule_json(r.thm3)}, {"thm4", rule_json(r.thm4)}, {"thm5", rule_json(r.thm5)}};
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(Kind::io, 0, 0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

SignedDigraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }
BooleanNetwork load_network(const std::string& path) { return parse_network(read_file(path)); }
Digraph load_digraph(const std::string& path) { return parse_digraph(read_file(path)); }

}  // namespace sigfix
