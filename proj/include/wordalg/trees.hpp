#pragma once

#include "wordalg/module.hpp"
#include "wordalg/words.hpp"

#include <compare>
#include <vector>

namespace wordalg {

/// Planar rooted tree with letter-decorated edges; child order matters and
/// all edge letters within one tree must be pairwise distinct.
class PlanarTree {
public:
    struct Edge;

    PlanarTree() = default;  // a single vertex
    explicit PlanarTree(std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    bool leaf() const { return edges_.empty(); }
    std::size_t edge_count() const;

    std::strong_ordering operator<=>(const PlanarTree& other) const;
    bool operator==(const PlanarTree& other) const;

private:
    std::vector<Edge> edges_;
};

struct PlanarTree::Edge {
    Letter label;
    PlanarTree subtree;

    std::strong_ordering operator<=>(const Edge& other) const;
    bool operator==(const Edge& other) const = default;
};

using Forest = std::vector<PlanarTree>;

/// True iff every letter occurs 0 or 2 times and no two distinct letters
/// form an ABAB subsequence.
bool is_unlaced(const Word& w);

/// Boundary word of a decorated tree: counterclockwise reading of edge
/// labels, each edge contributing its label on the way out and the way back.
/// Throws std::invalid_argument on duplicate edge decorations.
Word tree_to_word(const PlanarTree& t);

/// Inverse of tree_to_word on unlaced words, via a matched-pair stack parse.
/// Throws parse_error (with the violating position) on non-unlaced input.
PlanarTree word_to_tree(const Word& w);

Phrase forest_to_phrase(const Forest& f);

/// Admissible-cut coproduct on planar rooted forests: for a tree,
/// t (x) empty + empty (x) t plus, for every non-empty edge set meeting each
/// root-to-leaf path at most once, the pruned subtrees (in planar order) on
/// the left and the trunk on the right; extended multiplicatively to forests.
/// Cut edges are deleted together with their decoration, so the encoding by
/// boundary words matches the inscription coproduct with the delta pairing.
ModuleElement<Tensor2<Forest, Forest>> ck_coproduct(const Forest& f,
                                                    Ring ring = Ring::integers());

/// Canonical text: "." for the single vertex; otherwise a comma-separated
/// list of edges, each "<letter>" or "<letter>(<edges>)", e.g. "A(B,C)".
std::string tree_to_text(const PlanarTree& t);
std::string forest_to_text(const Forest& f);
PlanarTree parse_tree(const std::string& text);

/// All decorated planar trees with up to max_edges edges, each tree labeled
/// with distinct letters drawn (in every possible arrangement) from the pool.
std::vector<PlanarTree> enumerate_trees(std::size_t max_edges,
                                        const std::vector<Letter>& pool);

/// All forests with total edge count between 1 and max_total_edges, each
/// component decorated independently from the pool; single vertices are not
/// enumerated as components (they encode the empty word and are covered by
/// the word-level tests).
std::vector<Forest> enumerate_forests(std::size_t max_total_edges,
                                      const std::vector<Letter>& pool);

/// All unlaced words of length <= max_len over the pool, enumerated directly
/// by pruned search (independent of the tree encoding).
std::vector<Word> enumerate_unlaced_words(std::size_t max_len,
                                          const std::vector<Letter>& pool);

}  // namespace wordalg
