#pragma once

// Text and JSON serialization for complexes, graphs and starring traces.
//
// Complex text form:
//     dim <d> vertices <n>
//     <v0> <v1> ... <vd>        one facet per line, labels increasing
// Complex JSON form:
//     {"dim":d,"facets":[[...],...]}
// Graph text form:
//     nodes <n> [labels l1 ... ln]   labels default to 1..n
//     <u> <v>                         one edge per line
// Trace text form:
//     base <v0> ... <v(d+1)>          optional, defaults to 1..d+2
//     <facet vertices> | <new vertex> one starring step per line

#include <filesystem>
#include <string>
#include <string_view>

#include "stacktri/build.hpp"
#include "stacktri/core.hpp"

namespace stacktri {

/// Malformed input; line() is 1-based, 0 when not tied to a line.
class FormatError : public TopologyError {
public:
    FormatError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

enum class ComplexFormat { text, json };

std::string to_text(const SimplicialComplex& k);
std::string to_json(const SimplicialComplex& k);
std::string serialize(const SimplicialComplex& k, ComplexFormat format);

SimplicialComplex complex_from_text(std::string_view text);
SimplicialComplex complex_from_json(std::string_view text);
/// Detects the format from the first non-blank character.
SimplicialComplex parse_complex(std::string_view text);

SimplicialComplex import_complex(const std::filesystem::path& path);
/// JSON when the extension is .json, text otherwise.
void export_complex(const SimplicialComplex& k, const std::filesystem::path& path);

std::string graph_to_text(const Graph& g);
Graph graph_from_text(std::string_view text);

std::string trace_to_text(const StarringTrace& trace);
StarringTrace trace_from_text(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace stacktri
