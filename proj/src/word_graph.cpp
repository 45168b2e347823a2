#include "thompson/word_graph.hpp"

#include "thompson/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace thompson {

std::vector<std::size_t> WordGraph::sources() const {
    std::vector<bool> has_in(vertices.size(), false);
    for (const auto& e : edges) has_in[e.second] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!has_in[i]) out.push_back(i);
    return out;
}

std::vector<std::size_t> WordGraph::sinks() const {
    std::vector<bool> has_out(vertices.size(), false);
    for (const auto& e : edges) has_out[e.first] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!has_out[i]) out.push_back(i);
    return out;
}

std::string WordGraph::to_dot() const {
    std::string s = "digraph wordgraph {\n";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        s += "  v" + std::to_string(i) + " [label=\"" + vertices[i].str() + "\"";
        if (i == normal && i == anti_normal)
            s += ", shape=doubleoctagon, xlabel=\"normal, anti-normal\"";
        else if (i == normal)
            s += ", shape=box, xlabel=\"normal\"";
        else if (i == anti_normal)
            s += ", shape=diamond, xlabel=\"anti-normal\"";
        s += "];\n";
    }
    for (const auto& e : edges) s += "  v" + std::to_string(e.first) + " -> v" + std::to_string(e.second) + ";\n";
    s += "}\n";
    return s;
}

WordGraph word_graph(const Element& f, std::size_t max_vertices) {
    if (f.bottom() != BinaryTree::right_vine(f.bottom().leaves()))
        throw DomainError("word graph needs a positive element");
    Word start = normal_form(f);
    std::unordered_set<Word, WordHash> seen{start};
    std::deque<Word> queue{start};
    std::vector<std::pair<Word, Word>> raw_edges;
    while (!queue.empty()) {
        Word w = std::move(queue.front());
        queue.pop_front();
        for (auto& m : rewrite_moves(w)) {
            if (m.type != MoveType::F3 && m.type != MoveType::I3) continue;
            if (m.type == MoveType::F3) raw_edges.emplace_back(w, m.result);
            if (seen.insert(m.result).second) {
                if (seen.size() > max_vertices)
                    throw ResourceError("word graph exceeds " + std::to_string(max_vertices) + " vertices");
                queue.push_back(std::move(m.result));
            }
        }
    }
    WordGraph g;
    g.vertices.assign(seen.begin(), seen.end());
    std::sort(g.vertices.begin(), g.vertices.end());
    auto index = [&](const Word& w) {
        return static_cast<std::size_t>(std::lower_bound(g.vertices.begin(), g.vertices.end(), w) - g.vertices.begin());
    };
    for (const auto& [a, b] : raw_edges) g.edges.emplace_back(index(a), index(b));
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    g.normal = index(start);
    g.anti_normal = index(anti_normal_form(f));
    return g;
}

}  // namespace thompson
