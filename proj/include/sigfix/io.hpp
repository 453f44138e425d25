#ifndef SIGFIX_IO_HPP
#define SIGFIX_IO_HPP

#include <sigfix/kernels.hpp>
#include <sigfix/structure.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigfix {

class ParseError : public std::runtime_error {
public:
    enum class Kind { header, vertex, duplicate_arc, table_length, syntax, io };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
};

enum class TextFormat { sdigraph, boolnet, digraph };

/// Format named by the first non-comment line's keyword.
TextFormat detect_format(std::string_view text);

// "sdigraph <n>" then "<u> <v> <+|->" per arc.
SignedDigraph parse_graph(std::string_view text);
std::string format_graph(const SignedDigraph& g);

// "boolnet <n>" then "<v> : <u1> ... <uk> | <table>" for v = 1..n in order.
BooleanNetwork parse_network(std::string_view text);
std::string format_network(const BooleanNetwork& f);

// "digraph <n>" then "<u> <v>" per arc.
Digraph parse_digraph(std::string_view text);
std::string format_digraph(const Digraph& d);

/// Structured analysis: the ten report keys plus witnesses, versioned.
std::string to_json(const AnalysisReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

SignedDigraph load_graph(const std::string& path);
BooleanNetwork load_network(const std::string& path);
Digraph load_digraph(const std::string& path);

}  // namespace sigfix

#endif
