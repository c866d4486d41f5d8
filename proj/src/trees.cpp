#include "wordalg/trees.hpp"

#include "wordalg/text.hpp"

#include <algorithm>
#include <set>

namespace wordalg {

PlanarTree::PlanarTree(std::vector<Edge> edges) : edges_(std::move(edges)) {}

std::size_t PlanarTree::edge_count() const {
    std::size_t n = edges_.size();
    for (const Edge& e : edges_) n += e.subtree.edge_count();
    return n;
}

std::strong_ordering PlanarTree::operator<=>(const PlanarTree& other) const {
    std::size_t n = std::min(edges_.size(), other.edges_.size());
    for (std::size_t k = 0; k < n; ++k)
        if (auto c = edges_[k] <=> other.edges_[k]; c != 0) return c;
    return edges_.size() <=> other.edges_.size();
}

bool PlanarTree::operator==(const PlanarTree& other) const { return edges_ == other.edges_; }

std::strong_ordering PlanarTree::Edge::operator<=>(const Edge& other) const {
    if (auto c = label <=> other.label; c != 0) return c;
    return subtree <=> other.subtree;
}

bool is_unlaced(const Word& w) {
    std::map<Letter, std::size_t> count;
    for (const Letter& l : w.letters()) ++count[l];
    for (const auto& [l, n] : count)
        if (n != 2) return false;
    // no crossing: for letters a != b, forbid first_a < first_b < second_a < second_b
    std::map<Letter, std::pair<std::size_t, std::size_t>> occ;
    for (std::size_t p = 1; p <= w.length(); ++p) {
        const Letter& l = w.at(p);
        auto it = occ.find(l);
        if (it == occ.end())
            occ.emplace(l, std::make_pair(p, std::size_t{0}));
        else
            it->second.second = p;
    }
    for (const auto& [a, pa] : occ)
        for (const auto& [b, pb] : occ) {
            if (a == b) continue;
            if (pa.first < pb.first && pb.first < pa.second && pa.second < pb.second)
                return false;
        }
    return true;
}

namespace {

void collect_labels(const PlanarTree& t, std::set<Letter>& seen) {
    for (const auto& e : t.edges()) {
        if (!seen.insert(e.label).second)
            throw std::invalid_argument("duplicate edge decoration '" + e.label.symbol() + "'");
        collect_labels(e.subtree, seen);
    }
}

void boundary(const PlanarTree& t, std::vector<Letter>& out) {
    for (const auto& e : t.edges()) {
        out.push_back(e.label);
        boundary(e.subtree, out);
        out.push_back(e.label);
    }
}

}  // namespace

Word tree_to_word(const PlanarTree& t) {
    std::set<Letter> seen;
    collect_labels(t, seen);
    std::vector<Letter> out;
    boundary(t, out);
    return Word(std::move(out));
}

PlanarTree word_to_tree(const Word& w) {
    // Stack parse: the first occurrence of a letter opens a subtree, the
    // second closes it; any other pattern violates unlacedness.
    struct Frame {
        Letter open;
        std::vector<PlanarTree::Edge> edges;
        Frame(Letter l) : open(std::move(l)) {}
    };
    std::vector<Frame> stack;
    std::vector<PlanarTree::Edge> root_edges;
    std::map<Letter, std::size_t> state;  // 1 = open, 2 = closed
    for (std::size_t p = 1; p <= w.length(); ++p) {
        const Letter& l = w.at(p);
        auto it = state.find(l);
        if (it == state.end()) {
            state[l] = 1;
            stack.emplace_back(l);
        } else if (it->second == 2) {
            throw parse_error("not unlaced: letter '" + l.symbol() + "' occurs a third time",
                              p);
        } else if (stack.back().open != l) {
            throw parse_error("not unlaced: '" + l.symbol() + "' crosses '" +
                                  stack.back().open.symbol() + "'",
                              p);
        } else {
            Frame done = std::move(stack.back());
            stack.pop_back();
            PlanarTree::Edge e{done.open, PlanarTree(std::move(done.edges))};
            (stack.empty() ? root_edges : stack.back().edges).push_back(std::move(e));
            it->second = 2;
        }
    }
    if (!stack.empty())
        throw parse_error("not unlaced: letter '" + stack.back().open.symbol() +
                              "' occurs only once",
                          w.length() + 1);
    return PlanarTree(std::move(root_edges));
}

Phrase forest_to_phrase(const Forest& f) {
    std::vector<Word> ws;
    ws.reserve(f.size());
    for (const PlanarTree& t : f) ws.push_back(tree_to_word(t));
    return Phrase(std::move(ws));
}

namespace {

struct FlatEdge {
    Letter label;
    std::size_t parent;  // index of parent edge + 1; 0 for root edges
    const PlanarTree* subtree;
};

void flatten(const PlanarTree& t, std::size_t parent, std::vector<FlatEdge>& out) {
    for (const auto& e : t.edges()) {
        out.push_back({e.label, parent, &e.subtree});
        flatten(e.subtree, out.size(), out);
    }
}

PlanarTree trunk_without(const PlanarTree& t, const std::set<const PlanarTree*>& cut_subtrees) {
    std::vector<PlanarTree::Edge> edges;
    for (const auto& e : t.edges()) {
        if (cut_subtrees.count(&e.subtree)) continue;
        edges.push_back({e.label, trunk_without(e.subtree, cut_subtrees)});
    }
    return PlanarTree(std::move(edges));
}

ModuleElement<Tensor2<Forest, Forest>> tree_ck(const PlanarTree& t, const Ring& ring) {
    ModuleElement<Tensor2<Forest, Forest>> out;
    Coefficient one = Coefficient::one(ring);
    out.add_term({Forest{t}, Forest{}}, one);
    out.add_term({Forest{}, Forest{t}}, one);
    std::vector<FlatEdge> flat;
    flatten(t, 0, flat);
    std::size_t n = flat.size();
    if (n > 8 * sizeof(unsigned long long))
        throw cap_exceeded("tree too large for cut enumeration");
    for (unsigned long long mask = 1; mask < (1ull << n); ++mask) {
        // admissible: no chosen edge may have a chosen ancestor
        bool ok = true;
        for (std::size_t e = 0; e < n && ok; ++e) {
            if (!(mask >> e & 1)) continue;
            for (std::size_t anc = flat[e].parent; anc != 0; anc = flat[anc - 1].parent)
                if (mask >> (anc - 1) & 1) {
                    ok = false;
                    break;
                }
        }
        if (!ok) continue;
        Forest pruned;
        std::set<const PlanarTree*> cut_subtrees;
        for (std::size_t e = 0; e < n; ++e)
            if (mask >> e & 1) {
                pruned.push_back(*flat[e].subtree);  // flat order is planar preorder
                cut_subtrees.insert(flat[e].subtree);
            }
        out.add_term({std::move(pruned), Forest{trunk_without(t, cut_subtrees)}}, one);
    }
    return out;
}

}  // namespace

ModuleElement<Tensor2<Forest, Forest>> ck_coproduct(const Forest& f, Ring ring) {
    ModuleElement<Tensor2<Forest, Forest>> acc;
    acc.add_term({Forest{}, Forest{}}, Coefficient::one(ring));
    auto join = [](const Forest& a, const Forest& b) {
        Forest r = a;
        r.insert(r.end(), b.begin(), b.end());
        return r;
    };
    for (const PlanarTree& t : f) acc = tensor_mult(acc, tree_ck(t, ring), join);
    return acc;
}

std::string tree_to_text(const PlanarTree& t) {
    if (t.leaf()) return ".";
    std::string out;
    for (std::size_t k = 0; k < t.edges().size(); ++k) {
        const auto& e = t.edges()[k];
        if (k > 0) out += ",";
        out += e.label.symbol();
        if (!e.subtree.leaf()) out += "(" + tree_to_text(e.subtree) + ")";
    }
    return out;
}

std::string forest_to_text(const Forest& f) {
    if (f.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k > 0) out += "|";
        out += tree_to_text(f[k]);
    }
    return out;
}

namespace {

// edge-list := edge ("," edge)* ; edge := letter [ "(" edge-list ")" ]
std::vector<PlanarTree::Edge> parse_edge_list(const std::string& s, std::size_t& pos,
                                              std::size_t base);

PlanarTree::Edge parse_edge(const std::string& s, std::size_t& pos, std::size_t base) {
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ',' && s[pos] != '(' && s[pos] != ')') ++pos;
    std::string sym = s.substr(start, pos - start);
    if (sym.empty()) throw parse_error("expected an edge letter", base + start);
    Letter label = [&] {
        try {
            return Letter(sym);
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what(), base + start);
        }
    }();
    PlanarTree sub;
    if (pos < s.size() && s[pos] == '(') {
        ++pos;
        sub = PlanarTree(parse_edge_list(s, pos, base));
        if (pos >= s.size() || s[pos] != ')')
            throw parse_error("missing closing ')'", base + pos);
        ++pos;
    }
    return {std::move(label), std::move(sub)};
}

std::vector<PlanarTree::Edge> parse_edge_list(const std::string& s, std::size_t& pos,
                                              std::size_t base) {
    std::vector<PlanarTree::Edge> edges;
    edges.push_back(parse_edge(s, pos, base));
    while (pos < s.size() && s[pos] == ',') {
        ++pos;
        edges.push_back(parse_edge(s, pos, base));
    }
    return edges;
}

}  // namespace

PlanarTree parse_tree(const std::string& text) {
    if (text == ".") return PlanarTree();
    std::size_t pos = 0;
    auto edges = parse_edge_list(text, pos, 0);
    if (pos != text.size()) throw parse_error("trailing characters after the tree", pos);
    PlanarTree t(std::move(edges));
    std::set<Letter> seen;
    collect_labels(t, seen);  // rejects duplicate decorations
    return t;
}

namespace {

// All planar tree shapes with exactly n edges (children of each vertex kept
// in order; labels attached later).
std::vector<PlanarTree> shapes_with(std::size_t n, const Letter& placeholder) {
    if (n == 0) return {PlanarTree()};
    std::vector<PlanarTree> out;
    // first subtree takes j edges plus its own root edge; rest is a shape
    // with n-1-j edges attached at the same root
    for (std::size_t j = 0; j + 1 <= n; ++j) {
        auto firsts = shapes_with(j, placeholder);
        auto rests = shapes_with(n - 1 - j, placeholder);
        for (const auto& f : firsts)
            for (const auto& r : rests) {
                std::vector<PlanarTree::Edge> edges;
                edges.push_back({placeholder, f});
                for (const auto& e : r.edges()) edges.push_back(e);
                out.push_back(PlanarTree(std::move(edges)));
            }
    }
    return out;
}

void relabel(const PlanarTree& shape, const std::vector<Letter>& labels, std::size_t& next,
             std::vector<PlanarTree::Edge>& out) {
    for (const auto& e : shape.edges()) {
        Letter l = labels[next++];
        std::vector<PlanarTree::Edge> sub;
        relabel(e.subtree, labels, next, sub);
        out.push_back({std::move(l), PlanarTree(std::move(sub))});
    }
}

}  // namespace

std::vector<PlanarTree> enumerate_trees(std::size_t max_edges,
                                        const std::vector<Letter>& pool) {
    if (pool.empty()) throw std::invalid_argument("empty letter pool");
    std::vector<PlanarTree> out;
    for (std::size_t n = 0; n <= std::min(max_edges, pool.size()); ++n) {
        auto shapes = shapes_with(n, pool.front());
        // all arrangements of n distinct letters from the pool
        std::vector<std::size_t> idx(pool.size());
        for (std::size_t k = 0; k < pool.size(); ++k) idx[k] = k;
        std::vector<Letter> labels(n, pool.front());
        std::vector<bool> used(pool.size(), false);
        auto arrange = [&](auto&& self, std::size_t depth) -> void {
            if (depth == n) {
                for (const auto& shape : shapes) {
                    std::size_t next = 0;
                    std::vector<PlanarTree::Edge> edges;
                    relabel(shape, labels, next, edges);
                    out.push_back(PlanarTree(std::move(edges)));
                }
                return;
            }
            for (std::size_t k = 0; k < pool.size(); ++k) {
                if (used[k]) continue;
                used[k] = true;
                labels[depth] = pool[k];
                self(self, depth + 1);
                used[k] = false;
            }
        };
        arrange(arrange, 0);
    }
    return out;
}

std::vector<Forest> enumerate_forests(std::size_t max_total_edges,
                                      const std::vector<Letter>& pool) {
    std::vector<std::vector<PlanarTree>> by_edges(max_total_edges + 1);
    for (const PlanarTree& t : enumerate_trees(max_total_edges, pool)) {
        std::size_t n = t.edge_count();
        if (n >= 1) by_edges[n].push_back(t);
    }
    std::vector<Forest> out;
    Forest cur;
    auto rec = [&](auto&& self, std::size_t budget) -> void {
        if (!cur.empty()) out.push_back(cur);
        for (std::size_t n = 1; n <= budget; ++n)
            for (const PlanarTree& t : by_edges[n]) {
                cur.push_back(t);
                self(self, budget - n);
                cur.pop_back();
            }
    };
    rec(rec, max_total_edges);
    return out;
}

std::vector<Word> enumerate_unlaced_words(std::size_t max_len,
                                          const std::vector<Letter>& pool) {
    std::vector<Word> out;
    std::vector<Letter> cur;
    std::map<Letter, std::pair<std::size_t, std::size_t>> occ;  // first/second position
    auto rec = [&](auto&& self) -> void {
        bool closed = true;
        for (const auto& [l, p] : occ)
            if (p.second == 0) closed = false;
        if (closed) out.emplace_back(cur);
        if (cur.size() >= max_len) return;
        for (const Letter& l : pool) {
            auto it = occ.find(l);
            if (it != occ.end() && it->second.second != 0) continue;  // already twice
            std::size_t here = cur.size() + 1;
            if (it != occ.end()) {
                // closing l: forbid first_x < first_l < second_x < here
                bool crossing = false;
                for (const auto& [x, px] : occ)
                    if (!(x == l) && px.first < it->second.first && px.second != 0 &&
                        it->second.first < px.second) {
                        crossing = true;
                        break;
                    }
                if (crossing) continue;
                it->second.second = here;
                cur.push_back(l);
                self(self);
                cur.pop_back();
                it->second.second = 0;
            } else {
                occ.emplace(l, std::make_pair(here, std::size_t{0}));
                cur.push_back(l);
                self(self);
                cur.pop_back();
                occ.erase(l);
            }
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wordalg
