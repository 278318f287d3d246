#include "dgl/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "dgl/error.hpp"

namespace dgl::io {

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> out;
    std::string current;
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

double parse_real(const std::string& token, std::size_t line) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || token.empty() || errno == ERANGE) {
        throw ParseError("expected a real number, got '" + token + "'", line);
    }
    return v;
}

std::size_t parse_count(const std::string& token, std::size_t line) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("expected a positive integer, got '" + token + "'", line);
    }
    errno = 0;
    const auto v = std::strtoull(token.c_str(), nullptr, 10);
    if (errno == ERANGE || v == 0) {
        throw ParseError("expected a positive integer, got '" + token + "'", line);
    }
    return static_cast<std::size_t>(v);
}

// Checks one 1-based (tail, head, weight) triple and converts it to 0-based.
Edge checked_edge(std::size_t n, std::size_t tail, std::size_t head, double w, std::size_t line,
                  std::set<std::pair<Node, Node>>& seen) {
    if (tail == 0 || head == 0 || tail > n || head > n) {
        throw ParseError("node index out of range 1.." + std::to_string(n), line);
    }
    if (!std::isfinite(w) || w == 0.0) {
        throw ParseError("edge weight must be finite and nonzero", line);
    }
    if (!seen.emplace(tail, head).second) {
        throw ParseError("duplicate edge " + std::to_string(tail) + " -> " + std::to_string(head),
                         line);
    }
    return {tail - 1, head - 1, w};
}

Provenance parse_provenance(const std::string& kind, std::size_t parameter, std::size_t line) {
    if (kind == "dcid") return {Provenance::Kind::Dcid, parameter};
    if (kind == "compose") return {Provenance::Kind::Compose, parameter};
    throw ParseError("unknown provenance kind '" + kind + "'", line);
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

}  // namespace

std::string format_real(double v) {
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

Digraph parse_graph_text(std::string_view text) {
    std::size_t n = 0;
    std::size_t header_line = 0;
    std::optional<Provenance> provenance;
    std::vector<Edge> edges;
    std::set<std::pair<Node, Node>> seen;

    const auto lines = lines_of(text);
    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const std::size_t line = idx + 1;
        const auto tok = tokens_of(lines[idx]);
        if (tok.empty()) continue;
        if (tok[0] == "n") {
            if (tok.size() != 2) throw ParseError("expected 'n <count>'", line);
            if (n != 0) throw ParseError("node count given twice", line);
            n = parse_count(tok[1], line);
            header_line = line;
            continue;
        }
        if (tok[0] == "provenance") {
            if (tok.size() != 3) throw ParseError("expected 'provenance <kind> <value>'", line);
            provenance = parse_provenance(tok[1], parse_count(tok[2], line), line);
            continue;
        }
        if (n == 0) throw ParseError("edge before 'n <count>' header", line);
        if (tok.size() != 3) throw ParseError("expected '<tail> <head> <weight>'", line);
        edges.push_back(checked_edge(n, parse_count(tok[0], line), parse_count(tok[1], line),
                                     parse_real(tok[2], line), line, seen));
    }
    if (n == 0) throw ParseError("missing 'n <count>' header", header_line);
    return Digraph::from_edges(n, edges).with_provenance(provenance);
}

Digraph parse_graph_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), line_of_offset(text, e.byte));
    }
    try {
        const auto count = doc.at("n").get<std::int64_t>();
        if (count < 1) throw ParseError("\"n\" must be positive", 0);
        const auto n = static_cast<std::size_t>(count);
        std::vector<Edge> edges;
        std::set<std::pair<Node, Node>> seen;
        for (const auto& e : doc.value("edges", json::array())) {
            if (!e.is_array() || e.size() != 3) {
                throw ParseError("each edge must be [tail, head, weight]", 0);
            }
            const auto tail = e[0].get<std::int64_t>();
            const auto head = e[1].get<std::int64_t>();
            if (tail < 1 || head < 1) throw ParseError("node labels are 1-based", 0);
            edges.push_back(checked_edge(n, static_cast<std::size_t>(tail),
                                         static_cast<std::size_t>(head), e[2].get<double>(), 0,
                                         seen));
        }
        std::optional<Provenance> provenance;
        if (doc.contains("provenance")) {
            const auto& p = doc["provenance"];
            const auto kind = p.at("kind").get<std::string>();
            provenance = parse_provenance(kind, kind == "dcid" ? p.at("m").get<std::size_t>()
                                                                : p.at("split").get<std::size_t>(),
                                          0);
        }
        return Digraph::from_edges(n, edges).with_provenance(provenance);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed graph JSON: ") + e.what(), 0);
    }
}

Digraph parse_graph(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
    return parse_graph_text(text);
}

std::string to_graph_text(const Digraph& g) {
    std::ostringstream os;
    os << "n " << g.size() << "\n";
    if (const auto& p = g.provenance()) {
        os << "provenance " << (p->kind == Provenance::Kind::Dcid ? "dcid" : "compose") << " "
           << p->parameter << "\n";
    }
    for (const auto& e : g.edges()) {
        os << e.tail + 1 << " " << e.head + 1 << " " << format_real(e.weight) << "\n";
    }
    return os.str();
}

json to_graph_json(const Digraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.tail + 1, e.head + 1, e.weight});
    json out = {{"n", g.size()}, {"edges", std::move(edges)}};
    if (const auto& p = g.provenance()) {
        if (p->kind == Provenance::Kind::Dcid) {
            out["provenance"] = {{"kind", "dcid"}, {"m", p->parameter}};
        } else {
            out["provenance"] = {{"kind", "compose"}, {"split", p->parameter}};
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Digraph load_graph(const std::string& path) {
    return parse_graph(read_file(path));
}

void save_graph(const Digraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        out << to_graph_json(g).dump(2) << "\n";
    } else {
        out << to_graph_text(g);
    }
}

CrossEdges parse_cross_edges(std::string_view text) {
    CrossEdges out;
    std::vector<CrossEdge>* section = nullptr;
    const auto lines = lines_of(text);
    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const std::size_t line = idx + 1;
        const auto tok = tokens_of(lines[idx]);
        if (tok.empty()) continue;
        if (tok.size() == 1 && (tok[0] == "e12" || tok[0] == "e21")) {
            section = tok[0] == "e12" ? &out.e12 : &out.e21;
            continue;
        }
        if (!section) throw ParseError("edge before an 'e12' or 'e21' section line", line);
        if (tok.size() != 3) throw ParseError("expected '<tail> <head> <weight>'", line);
        const double w = parse_real(tok[2], line);
        if (!std::isfinite(w) || w == 0.0) {
            throw ParseError("edge weight must be finite and nonzero", line);
        }
        section->push_back({parse_count(tok[0], line) - 1, parse_count(tok[1], line) - 1, w});
    }
    return out;
}

std::vector<double> parse_vector(std::string_view text) {
    std::vector<double> out;
    const auto lines = lines_of(text);
    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        for (const auto& t : tokens_of(lines[idx])) out.push_back(parse_real(t, idx + 1));
    }
    return out;
}

json to_json(const SpectralReport& r) {
    json eigs = json::array();
    for (const auto& z : r.eigenvalues) eigs.push_back({z.real(), z.imag()});
    return {{"eigenvalues", std::move(eigs)}, {"is_real", r.is_real}, {"tolerance", r.tolerance}};
}

namespace {

json labels(const std::vector<Node>& nodes) {
    json out = json::array();
    for (Node v : nodes) out.push_back(v + 1);
    return out;
}

}  // namespace

json to_json(const BlockDecomposition& d) {
    json out = json::array();
    for (const auto& b : d.blocks) {
        out.push_back({{"nodes", labels(b.nodes)}, {"tag", to_string(b.tag)}});
    }
    return out;
}

json to_json(const ClassificationVerdict& v) {
    json out = {{"verdict", to_string(v.verdict)}, {"basis", to_string(v.basis)}};
    json certificate = nullptr;
    if (v.blocks) {
        certificate = {{"blocks", to_json(*v.blocks)}};
    } else if (v.cycle) {
        certificate = {{"n", v.cycle->size()}, {"cycle", labels(*v.cycle)}};
    } else if (v.udcec) {
        certificate = {{"n", v.udcec->n}, {"m", v.udcec->m}, {"cycle", labels(v.udcec->cycle)}};
    } else if (v.dcid) {
        certificate = {{"base_n", v.dcid->base_size}, {"m", v.dcid->layers}};
    }
    out["certificate"] = std::move(certificate);

    json violation = nullptr;
    if (v.violating_pair) {
        violation = {{"pair", {v.violating_pair->first + 1, v.violating_pair->second + 1}}};
    } else if (v.violating_set) {
        violation = {{"nodes", labels(*v.violating_set)}};
    }
    out["violation"] = std::move(violation);
    out["spectrum"] = v.numerical ? to_json(*v.numerical) : json(nullptr);
    return out;
}

json to_json(const Outcome& o) {
    return {{"outcome", to_string(o.kind)}, {"t_event", o.time}};
}

void write_trajectory_csv(const SimulationResult& r, std::ostream& out) {
    const std::size_t n = r.samples.empty() ? 0 : r.samples.front().x.size();
    out << "t";
    for (std::size_t i = 1; i <= n; ++i) out << ",x" << i;
    out << ",disagreement\n";
    for (std::size_t s = 0; s < r.samples.size(); ++s) {
        out << format_real(r.samples[s].t);
        for (double v : r.samples[s].x) out << "," << format_real(v);
        out << "," << format_real(r.disagreement_trace[s].second) << "\n";
    }
}

}  // namespace dgl::io
