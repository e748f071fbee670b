#include "quiverreach/io.hpp"

#include <fstream>
#include <sstream>

#include "quiverreach/error.hpp"

namespace quiverreach {

std::vector<TokenLine> tokenize_lines(std::string_view text) {
    std::vector<TokenLine> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;

        TokenLine parsed{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) parsed.tokens.emplace_back(line.substr(i, j - i));
            i = j;
        }
        if (parsed.tokens.empty() || parsed.tokens.front().starts_with('#')) continue;
        lines.push_back(std::move(parsed));
    }
    return lines;
}

Quiver parse_quiver(std::string_view text) {
    const auto lines = tokenize_lines(text);
    Quiver q;
    for (const auto& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "v") {
            if (t.size() != 2) throw ParseError(line.number, "expected 'v <id>'");
            if (q.find_vertex(t[1])) throw ParseError(line.number, "duplicate vertex id '" + t[1] + "'");
            q.add_vertex(t[1]);
        } else if (t[0] != "e") {
            throw ParseError(line.number, "unknown directive '" + t[0] + "'");
        }
    }
    for (const auto& line : lines) {
        const auto& t = line.tokens;
        if (t[0] != "e") continue;
        if (t.size() != 4) throw ParseError(line.number, "expected 'e <id> <src> <dst>'");
        if (q.find_edge(t[1])) throw ParseError(line.number, "duplicate edge id '" + t[1] + "'");
        for (int k : {2, 3})
            if (!q.find_vertex(t[k]))
                throw ParseError(line.number, "edge '" + t[1] + "' references undeclared vertex '" + t[k] + "'");
        q.add_edge(t[1], t[2], t[3]);
    }
    return q;
}

QuiverMorphism parse_morphism(std::string_view text) {
    QuiverMorphism f;
    for (const auto& line : tokenize_lines(text)) {
        const auto& t = line.tokens;
        if (t[0] != "vm" && t[0] != "em") throw ParseError(line.number, "unknown directive '" + t[0] + "'");
        if (t.size() != 3) throw ParseError(line.number, "expected '" + t[0] + " <from> <to>'");
        auto& map = t[0] == "vm" ? f.vertex_map : f.edge_map;
        if (!map.emplace(t[1], t[2]).second) throw ParseError(line.number, "'" + t[1] + "' mapped twice");
    }
    return f;
}

std::string write_qvr(const Quiver& q) {
    std::ostringstream out;
    for (const auto& v : q.vertex_ids()) out << "v " << v << '\n';
    for (const auto& e : q.edges())
        out << "e " << e.id << ' ' << q.vertex_id(e.source) << ' ' << q.vertex_id(e.target) << '\n';
    return out.str();
}

std::string write_morphism(const QuiverMorphism& f) {
    std::ostringstream out;
    for (const auto& [a, b] : f.vertex_map) out << "vm " << a << ' ' << b << '\n';
    for (const auto& [a, b] : f.edge_map) out << "em " << a << ' ' << b << '\n';
    return out.str();
}

nlohmann::json to_json(const Quiver& q) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : q.edges())
        edges.push_back({{"id", e.id}, {"src", q.vertex_id(e.source)}, {"dst", q.vertex_id(e.target)}});
    return {{"vertices", q.vertex_ids()}, {"edges", std::move(edges)}};
}

Quiver quiver_from_json(const nlohmann::json& j) {
    try {
        Quiver q;
        for (const auto& v : j.at("vertices")) {
            const auto id = v.get<std::string>();
            if (q.find_vertex(id)) throw ParseError(0, "duplicate vertex id '" + id + "'");
            q.add_vertex(id);
        }
        for (const auto& e : j.at("edges")) {
            const auto id = e.at("id").get<std::string>();
            const auto src = e.at("src").get<std::string>(), dst = e.at("dst").get<std::string>();
            if (q.find_edge(id)) throw ParseError(0, "duplicate edge id '" + id + "'");
            if (!q.find_vertex(src) || !q.find_vertex(dst))
                throw ParseError(0, "edge '" + id + "' references an undeclared vertex");
            q.add_edge(id, src, dst);
        }
        return q;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed quiver JSON: ") + e.what());
    }
}

nlohmann::json to_json(const Quiver& q, const Path& p) {
    std::vector<std::string> vertices;
    for (VertexIndex v : path_vertices(q, p)) vertices.push_back(q.vertex_id(v));
    return {{"edges", path_edge_ids(q, p)}, {"vertices", std::move(vertices)}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace quiverreach
