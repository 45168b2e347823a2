#pragma once

#include "thompson/element.hpp"
#include "thompson/words.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace thompson {

// Words for one positive element, with an edge u -> v whenever v comes from u by a single
// move xn xk -> xk x(n+1) (n > k). Vertices are sorted; edges are sorted index pairs.
struct WordGraph {
    std::vector<Word> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t normal = 0;       // vertex index of the normal form
    std::size_t anti_normal = 0;  // vertex index of the anti-normal form

    std::vector<std::size_t> sources() const;
    std::vector<std::size_t> sinks() const;
    std::string to_dot() const;
};

// Throws DomainError if f is not positive and ResourceError past max_vertices.
WordGraph word_graph(const Element& f, std::size_t max_vertices = 1000000);

}  // namespace thompson
