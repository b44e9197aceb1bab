#include "stacktri/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace stacktri {

FormatError::FormatError(std::size_t line, const std::string& message)
    : TopologyError(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(std::move(current));
            current.clear();
        } else if (c != '\r') {
            current.push_back(c);
        }
    }
    if (!current.empty()) lines.push_back(std::move(current));
    return lines;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t") == std::string::npos; }

long long parse_integer(const std::string& token, std::size_t line) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw FormatError(line, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) throw FormatError(line, "expected an integer, got '" + token + "'");
    return value;
}

Vertex parse_vertex(const std::string& token, std::size_t line) {
    auto v = parse_integer(token, line);
    if (v < 0 || v > 0xffffffffLL) throw FormatError(line, "vertex label out of range: " + token);
    return static_cast<Vertex>(v);
}

// Shared validation for both complex formats: increasing lines, no
// duplicates, no facet inside another, dimensions as declared.
class FacetCollector {
public:
    FacetCollector(int dim, std::optional<std::size_t> vertex_count)
        : dim_(dim), vertex_count_(vertex_count) {}

    void add(const std::vector<Vertex>& verts, std::size_t line) {
        if (verts.empty()) throw FormatError(line, "empty facet");
        for (std::size_t i = 1; i < verts.size(); ++i)
            if (verts[i] <= verts[i - 1]) throw FormatError(line, "vertices not increasing");
        if (static_cast<int>(verts.size()) > dim_ + 1)
            throw FormatError(line, "dimension mismatch: facet of dimension " +
                                        std::to_string(verts.size() - 1) + " in a complex of dimension " +
                                        std::to_string(dim_));
        Simplex s(verts);
        if (!seen_.insert(s).second) throw FormatError(line, "duplicate facet " + s.to_string());
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (s.is_subset_of(facets_[i]))
                throw FormatError(line, "facet " + s.to_string() + " contained in " + facets_[i].to_string());
            if (facets_[i].is_subset_of(s))
                throw FormatError(line, "facet " + s.to_string() + " contains " + facets_[i].to_string() +
                                            " from line " + std::to_string(lines_[i]));
        }
        facets_.push_back(std::move(s));
        lines_.push_back(line);
    }

    SimplicialComplex finish() {
        SimplicialComplex k(facets_);
        if (k.dim() != dim_)
            throw FormatError(0, "dimension mismatch: declared " + std::to_string(dim_) + ", facets give " +
                                     std::to_string(k.dim()));
        if (vertex_count_ && *vertex_count_ != k.num_vertices())
            throw FormatError(0, "vertex count mismatch: declared " + std::to_string(*vertex_count_) +
                                     ", facets use " + std::to_string(k.num_vertices()));
        return k;
    }

private:
    int dim_;
    std::optional<std::size_t> vertex_count_;
    std::set<Simplex> seen_;
    std::vector<Simplex> facets_;
    std::vector<std::size_t> lines_;
};

}  // namespace

std::string to_text(const SimplicialComplex& k) {
    std::ostringstream out;
    out << "dim " << k.dim() << " vertices " << k.num_vertices() << '\n';
    for (const auto& f : k.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << '\n';
    }
    return out.str();
}

std::string to_json(const SimplicialComplex& k) {
    nlohmann::json facets = nlohmann::json::array();
    for (const auto& f : k.facets()) facets.push_back(f.vertices());
    nlohmann::json doc;
    doc["dim"] = k.dim();
    doc["facets"] = std::move(facets);
    return doc.dump() + "\n";
}

std::string serialize(const SimplicialComplex& k, ComplexFormat format) {
    return format == ComplexFormat::json ? to_json(k) : to_text(k);
}

SimplicialComplex complex_from_text(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && blank(lines[i])) ++i;
    if (i == lines.size()) throw FormatError(0, "missing header 'dim <d> vertices <n>'");

    std::istringstream header(lines[i]);
    std::string w1, d, w2, n, extra;
    header >> w1 >> d >> w2 >> n;
    if (w1 != "dim" || w2 != "vertices" || d.empty() || n.empty() || (header >> extra))
        throw FormatError(i + 1, "expected header 'dim <d> vertices <n>'");
    const auto dim = parse_integer(d, i + 1);
    const auto count = parse_integer(n, i + 1);
    if (dim < -1 || count < 0) throw FormatError(i + 1, "negative dimension or vertex count");

    FacetCollector collector(static_cast<int>(dim), static_cast<std::size_t>(count));
    for (++i; i < lines.size(); ++i) {
        if (blank(lines[i])) continue;
        std::istringstream row(lines[i]);
        std::vector<Vertex> verts;
        for (std::string token; row >> token;) verts.push_back(parse_vertex(token, i + 1));
        collector.add(verts, i + 1);
    }
    return collector.finish();
}

SimplicialComplex complex_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("facets") || !doc["dim"].is_number_integer() ||
        !doc["facets"].is_array())
        throw FormatError(0, "expected {\"dim\": d, \"facets\": [[...], ...]}");
    const auto dim = doc["dim"].get<long long>();
    if (dim < -1) throw FormatError(0, "negative dimension");

    FacetCollector collector(static_cast<int>(dim), std::nullopt);
    std::size_t index = 0;
    for (const auto& facet : doc["facets"]) {
        ++index;
        if (!facet.is_array()) throw FormatError(index, "facet is not an array");
        std::vector<Vertex> verts;
        for (const auto& v : facet) {
            if (!v.is_number_unsigned()) throw FormatError(index, "vertex label is not a non-negative integer");
            verts.push_back(v.get<Vertex>());
        }
        collector.add(verts, index);
    }
    return collector.finish();
}

SimplicialComplex parse_complex(std::string_view text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string_view::npos && text[pos] == '{') return complex_from_json(text);
    return complex_from_text(text);
}

SimplicialComplex import_complex(const std::filesystem::path& path) { return parse_complex(read_file(path)); }

void export_complex(const SimplicialComplex& k, const std::filesystem::path& path) {
    write_file(path, serialize(k, path.extension() == ".json" ? ComplexFormat::json : ComplexFormat::text));
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << "nodes " << g.size();
    bool default_labels = true;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.label(i) != i + 1) default_labels = false;
    if (!default_labels) {
        out << " labels";
        for (auto l : g.labels()) out << ' ' << l;
    }
    out << '\n';
    for (auto [a, b] : g.edge_labels()) out << a << ' ' << b << '\n';
    return out.str();
}

Graph graph_from_text(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && blank(lines[i])) ++i;
    if (i == lines.size()) throw FormatError(0, "missing header 'nodes <n>'");

    std::istringstream header(lines[i]);
    std::string word, count_token;
    header >> word >> count_token;
    if (word != "nodes" || count_token.empty()) throw FormatError(i + 1, "expected header 'nodes <n>'");
    const auto count = parse_integer(count_token, i + 1);
    if (count < 0) throw FormatError(i + 1, "negative node count");

    std::vector<Vertex> labels;
    if (header >> word) {
        if (word != "labels") throw FormatError(i + 1, "expected 'labels' after node count");
        for (std::string token; header >> token;) labels.push_back(parse_vertex(token, i + 1));
        if (labels.size() != static_cast<std::size_t>(count))
            throw FormatError(i + 1, "label count does not match node count");
        if (std::set<Vertex>(labels.begin(), labels.end()).size() != labels.size())
            throw FormatError(i + 1, "duplicate node label");
    } else {
        for (long long n = 1; n <= count; ++n) labels.push_back(static_cast<Vertex>(n));
    }

    Graph g(labels);
    for (++i; i < lines.size(); ++i) {
        if (blank(lines[i])) continue;
        std::istringstream row(lines[i]);
        std::string a, b, extra;
        row >> a >> b;
        if (b.empty() || (row >> extra)) throw FormatError(i + 1, "expected an edge 'u v'");
        auto u = g.find(parse_vertex(a, i + 1));
        auto v = g.find(parse_vertex(b, i + 1));
        if (!u || !v) throw FormatError(i + 1, "edge endpoint is not a node");
        if (*u == *v) throw FormatError(i + 1, "loop edge");
        g.add_edge(*u, *v);
    }
    return g;
}

std::string trace_to_text(const StarringTrace& trace) {
    std::ostringstream out;
    if (!trace.base.empty()) {
        out << "base";
        for (auto v : trace.base) out << ' ' << v;
        out << '\n';
    }
    for (const auto& step : trace.steps) {
        for (std::size_t i = 0; i < step.facet.size(); ++i) out << (i ? " " : "") << step.facet[i];
        out << " | " << step.new_vertex << '\n';
    }
    return out.str();
}

StarringTrace trace_from_text(std::string_view text) {
    StarringTrace trace;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (blank(lines[i])) continue;
        std::istringstream row(lines[i]);
        std::string token;
        row >> token;
        if (token == "base") {
            if (!trace.steps.empty() || !trace.base.empty())
                throw FormatError(i + 1, "base must be the first line");
            std::vector<Vertex> verts;
            while (row >> token) verts.push_back(parse_vertex(token, i + 1));
            try {
                trace.base = Simplex(verts);
            } catch (const TopologyError& e) {
                throw FormatError(i + 1, e.what());
            }
            continue;
        }
        std::vector<Vertex> facet;
        bool bar = false;
        std::vector<std::string> after;
        for (bool first = true; first || (row >> token); first = false) {
            if (token == "|") {
                if (bar) throw FormatError(i + 1, "more than one '|'");
                bar = true;
            } else if (bar) {
                after.push_back(token);
            } else {
                facet.push_back(parse_vertex(token, i + 1));
            }
        }
        if (!bar || after.size() != 1) throw FormatError(i + 1, "expected '<facet vertices> | <new vertex>'");
        try {
            trace.steps.push_back({Simplex(facet), parse_vertex(after[0], i + 1)});
        } catch (const FormatError&) {
            throw;
        } catch (const TopologyError& e) {
            throw FormatError(i + 1, e.what());
        }
    }
    return trace;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TopologyError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw TopologyError("cannot write " + path.string());
    out << contents;
    if (!out) throw TopologyError("write failed for " + path.string());
}

}  // namespace stacktri
