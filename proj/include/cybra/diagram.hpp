#ifndef CYBRA_DIAGRAM_HPP
#define CYBRA_DIAGRAM_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cybra/errors.hpp"

namespace cybra {

enum class Row { Top, Bottom };

/// A vertex of a rank-k diagram: row plus 1-based position.
struct Vertex {
    Row row;
    int index; // 1..k

    friend bool operator==(const Vertex& a, const Vertex& b) {
        return a.row == b.row && a.index == b.index;
    }
};

// Total vertex order: (Top,1) < ... < (Top,k) < (Bottom,1) < ... < (Bottom,k),
// realized as codes 0..2k-1.
inline int vertex_code(const Vertex& v, int k) { return (v.row == Row::Top ? 0 : k) + v.index - 1; }
inline Vertex vertex_from_code(int code, int k) {
    return code < k ? Vertex{Row::Top, code + 1} : Vertex{Row::Bottom, code - k + 1};
}

/// A diagram edge in canonical storage: from < to in the total vertex order.
struct DiagEdge {
    int from = 0; // vertex code
    int to = 0;   // vertex code
    int label = 0;

    friend bool operator==(const DiagEdge&, const DiagEdge&) = default;
    friend auto operator<=>(const DiagEdge&, const DiagEdge&) = default;
};

/// Unlabeled Brauer diagram: perfect matching on k top + k bottom vertices,
/// stored as sorted pairs (a < b) of vertex codes.
class BrauerDiagram {
public:
    BrauerDiagram() : k_(0) {}
    BrauerDiagram(int k, std::vector<std::pair<int, int>> edges) : k_(k) {
        if (k < 0) throw not_a_matching("negative rank");
        std::vector<int> deg(static_cast<size_t>(2 * k), 0);
        for (auto& [a, b] : edges) {
            if (a > b) std::swap(a, b);
            if (a < 0 || b >= 2 * k || a == b) throw not_a_matching("edge endpoint out of range");
            ++deg[static_cast<size_t>(a)];
            ++deg[static_cast<size_t>(b)];
        }
        for (int d : deg)
            if (d != 1) throw not_a_matching("vertex degree != 1");
        std::sort(edges.begin(), edges.end());
        edges_ = std::move(edges);
    }

    static BrauerDiagram identity(int k) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < k; ++i) e.emplace_back(i, k + i);
        return BrauerDiagram(k, std::move(e));
    }

    int k() const { return k_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    friend bool operator==(const BrauerDiagram&, const BrauerDiagram&) = default;
    friend auto operator<=>(const BrauerDiagram&, const BrauerDiagram&) = default;

private:
    int k_;
    std::vector<std::pair<int, int>> edges_;
};

/// Canonical labeled directed Brauer diagram.  Each stored edge points from
/// the smaller to the larger endpoint in the total vertex order; reversing a
/// raw edge replaces its label t by (m - t) mod m.  Edge list sorted.
class LabeledDiagram {
public:
    LabeledDiagram() : k_(0), m_(1) {}

    /// Canonicalize raw directed labeled edges given as ((from,to,label)).
    static LabeledDiagram canonicalize(const std::vector<std::tuple<Vertex, Vertex, int>>& raw, int k,
                                       int m) {
        if (k < 0) throw not_a_matching("negative rank");
        if (m < 1) throw bad_modulus("m must be >= 1");
        std::vector<DiagEdge> edges;
        edges.reserve(raw.size());
        for (const auto& [vf, vt, label] : raw) {
            if (vf.index < 1 || vf.index > k || vt.index < 1 || vt.index > k)
                throw not_a_matching("vertex index out of range 1.." + std::to_string(k));
            if (label < 0 || label >= m)
                throw bad_label("label " + std::to_string(label) + " not in 0.." + std::to_string(m - 1));
            edges.push_back(make_edge(vertex_code(vf, k), vertex_code(vt, k), label, m));
        }
        return from_canonical_edges(std::move(edges), k, m);
    }

    /// Build from edges already expressed on vertex codes (any orientation).
    static LabeledDiagram from_code_edges(std::vector<DiagEdge> raw, int k, int m) {
        for (auto& e : raw) {
            if (e.label < 0 || e.label >= m) throw bad_label("label out of range");
            if (e.from < 0 || e.from >= 2 * k || e.to < 0 || e.to >= 2 * k)
                throw not_a_matching("vertex code out of range");
            if (e.from > e.to) {
                std::swap(e.from, e.to);
                e.label = (m - e.label) % m;
            }
        }
        return from_canonical_edges(std::move(raw), k, m);
    }

    static LabeledDiagram identity(int k, int m) {
        std::vector<DiagEdge> e;
        for (int i = 0; i < k; ++i) e.push_back(DiagEdge{i, k + i, 0});
        return from_canonical_edges(std::move(e), k, m);
    }

    int k() const { return k_; }
    int m() const { return m_; }
    const std::vector<DiagEdge>& edges() const { return edges_; }

    bool is_identity() const {
        for (const auto& e : edges_)
            if (e.from + k_ != e.to || e.label != 0) return false;
        return true;
    }

    /// All strands vertical (top i -- bottom j), no horizontal edges.
    bool is_through_only() const {
        for (const auto& e : edges_)
            if (!(e.from < k_ && e.to >= k_)) return false;
        return true;
    }

    BrauerDiagram strip_labels() const {
        std::vector<std::pair<int, int>> e;
        e.reserve(edges_.size());
        for (const auto& d : edges_) e.emplace_back(d.from, d.to);
        return BrauerDiagram(k_, std::move(e));
    }

    friend bool operator==(const LabeledDiagram&, const LabeledDiagram&) = default;
    friend auto operator<=>(const LabeledDiagram&, const LabeledDiagram&) = default;

private:
    static DiagEdge make_edge(int a, int b, int label, int m) {
        if (a == b) throw not_a_matching("self-loop edge");
        if (a < b) return DiagEdge{a, b, label};
        return DiagEdge{b, a, (m - label) % m};
    }

    static LabeledDiagram from_canonical_edges(std::vector<DiagEdge> edges, int k, int m) {
        std::vector<int> deg(static_cast<size_t>(2 * k), 0);
        for (const auto& e : edges) {
            ++deg[static_cast<size_t>(e.from)];
            ++deg[static_cast<size_t>(e.to)];
        }
        for (int d : deg)
            if (d != 1) throw not_a_matching("vertex degree != 1");
        std::sort(edges.begin(), edges.end());
        LabeledDiagram d;
        d.k_ = k;
        d.m_ = m;
        d.edges_ = std::move(edges);
        return d;
    }

    int k_, m_;
    std::vector<DiagEdge> edges_;
};

inline LabeledDiagram to_labeled(const BrauerDiagram& b, int m) {
    std::vector<DiagEdge> e;
    for (auto [a, c] : b.edges()) e.push_back(DiagEdge{a, c, 0});
    return LabeledDiagram::from_code_edges(std::move(e), b.k(), m);
}

/// Result of diagram concatenation: the canonical product diagram plus the
/// multiset of closed-loop labels, each normalized to min(l, m-l).
struct CompositionResult {
    std::vector<int> loops; // sorted ascending
    LabeledDiagram diagram;
};

/// Concatenation a over b (a's bottom row glued to b's top row).  Path labels
/// add along traversal direction; traversing an edge against its stored
/// orientation subtracts its label.
inline CompositionResult compose(const LabeledDiagram& a, const LabeledDiagram& b) {
    if (a.k() != b.k() || a.m() != b.m()) throw size_mismatch("compose: k or m differ");
    const int k = a.k();
    const int m = a.m();

    // Vertex classes of the concatenated graph, as codes 0..3k-1:
    //   0..k-1      final top      (a's top)
    //   k..2k-1     middle         (a's bottom = b's top)
    //   2k..3k-1    final bottom   (b's bottom)
    struct GEdge {
        int u, v;  // graph codes, direction u -> v carries +label
        int label;
    };
    std::vector<GEdge> gedges;
    gedges.reserve(static_cast<size_t>(2 * k));
    for (const auto& e : a.edges()) gedges.push_back(GEdge{e.from, e.to, e.label}); // rows already 0..2k-1
    for (const auto& e : b.edges()) gedges.push_back(GEdge{e.from + k, e.to + k, e.label});

    std::vector<std::vector<int>> incident(static_cast<size_t>(3 * k));
    for (size_t i = 0; i < gedges.size(); ++i) {
        incident[static_cast<size_t>(gedges[i].u)].push_back(static_cast<int>(i));
        incident[static_cast<size_t>(gedges[i].v)].push_back(static_cast<int>(i));
    }

    std::vector<bool> used(gedges.size(), false);
    auto is_terminal = [&](int v) { return v < k || v >= 2 * k; };
    auto walk_from = [&](int start) {
        // follows the unique unused path from a terminal vertex; returns (end, label)
        int cur = start;
        long lab = 0;
        while (true) {
            int next_edge = -1;
            for (int ei : incident[static_cast<size_t>(cur)])
                if (!used[static_cast<size_t>(ei)]) {
                    next_edge = ei;
                    break;
                }
            const GEdge& ge = gedges[static_cast<size_t>(next_edge)];
            used[static_cast<size_t>(next_edge)] = true;
            if (ge.u == cur) {
                lab += ge.label;
                cur = ge.v;
            } else {
                lab -= ge.label;
                cur = ge.u;
            }
            if (is_terminal(cur)) break;
        }
        int lm = static_cast<int>(((lab % m) + m) % m);
        return std::pair<int, int>{cur, lm};
    };

    std::vector<DiagEdge> out_edges;
    for (int start = 0; start < 3 * k; ++start) {
        if (!is_terminal(start)) continue;
        bool fresh = false;
        for (int ei : incident[static_cast<size_t>(start)])
            if (!used[static_cast<size_t>(ei)]) fresh = true;
        if (!fresh) continue;
        auto [end, lab] = walk_from(start);
        // graph codes -> final diagram codes: top 0..k-1 stays, bottom 2k.. -> k..
        auto final_code = [&](int v) { return v < k ? v : v - k; };
        out_edges.push_back(DiagEdge{final_code(start), final_code(end), lab});
    }

    std::vector<int> loops;
    for (int v = k; v < 2 * k; ++v) {
        bool fresh = false;
        for (int ei : incident[static_cast<size_t>(v)])
            if (!used[static_cast<size_t>(ei)]) fresh = true;
        if (!fresh) continue;
        // closed loop through middle vertices only
        int cur = v;
        long lab = 0;
        while (true) {
            int next_edge = -1;
            for (int ei : incident[static_cast<size_t>(cur)])
                if (!used[static_cast<size_t>(ei)]) {
                    next_edge = ei;
                    break;
                }
            if (next_edge < 0) break; // back at start, both edges consumed
            const GEdge& ge = gedges[static_cast<size_t>(next_edge)];
            used[static_cast<size_t>(next_edge)] = true;
            if (ge.u == cur) {
                lab += ge.label;
                cur = ge.v;
            } else {
                lab -= ge.label;
                cur = ge.u;
            }
        }
        int lm = static_cast<int>(((lab % m) + m) % m);
        loops.push_back(std::min(lm, (m - lm) % m));
    }
    std::sort(loops.begin(), loops.end());

    return CompositionResult{std::move(loops),
                             LabeledDiagram::from_code_edges(std::move(out_edges), k, m)};
}

/// Closed-form diagram count (2k)! m^k / (k! 2^k) = (2k-1)!! * m^k.
inline long long count_diagrams(int k, int m) {
    if (k < 0 || m < 1) throw error("count_diagrams: bad arguments");
    long long c = 1;
    for (int j = 1; j < 2 * k; j += 2) c *= j;
    for (int j = 0; j < k; ++j) c *= m;
    return c;
}

namespace detail {
inline void enumerate_rec(std::vector<DiagEdge>& acc, std::vector<bool>& taken, int k, int m,
                          std::vector<LabeledDiagram>& out) {
    int first = -1;
    for (int v = 0; v < 2 * k; ++v)
        if (!taken[static_cast<size_t>(v)]) {
            first = v;
            break;
        }
    if (first < 0) {
        out.push_back(LabeledDiagram::from_code_edges(acc, k, m));
        return;
    }
    taken[static_cast<size_t>(first)] = true;
    for (int w = first + 1; w < 2 * k; ++w) {
        if (taken[static_cast<size_t>(w)]) continue;
        taken[static_cast<size_t>(w)] = true;
        for (int label = 0; label < m; ++label) {
            acc.push_back(DiagEdge{first, w, label});
            enumerate_rec(acc, taken, k, m, out);
            acc.pop_back();
        }
        taken[static_cast<size_t>(w)] = false;
    }
    taken[static_cast<size_t>(first)] = false;
}
} // namespace detail

/// All canonical labeled diagrams of Br_{k,m}, in lexicographic order of
/// their canonical edge lists.
inline std::vector<LabeledDiagram> enumerate_diagrams(int k, int m) {
    if (k < 0) throw error("enumerate_diagrams: k < 0");
    if (m < 1) throw bad_modulus("enumerate_diagrams: m < 1");
    std::vector<LabeledDiagram> out;
    std::vector<DiagEdge> acc;
    std::vector<bool> taken(static_cast<size_t>(2 * k), false);
    detail::enumerate_rec(acc, taken, k, m, out);
    return out;
}

/// Perfect matching on s top + t bottom vertices (codes: top 0..s-1,
/// bottom s..s+t-1).  Exists only when s+t is even.
struct UnevenDiagram {
    int s = 0, t = 0;
    std::vector<std::pair<int, int>> edges; // sorted, a < b
};

inline std::vector<UnevenDiagram> enumerate_uneven(int s, int t) {
    if (s < 0 || t < 0) throw error("enumerate_uneven: negative size");
    std::vector<UnevenDiagram> out;
    if ((s + t) % 2 != 0) return out;
    const int n = s + t;
    std::vector<std::pair<int, int>> acc;
    std::vector<bool> taken(static_cast<size_t>(n), false);
    // reuse the matching recursion (labels trivial, m=1)
    auto rec = [&](auto&& self) -> void {
        int first = -1;
        for (int v = 0; v < n; ++v)
            if (!taken[static_cast<size_t>(v)]) {
                first = v;
                break;
            }
        if (first < 0) {
            out.push_back(UnevenDiagram{s, t, acc});
            return;
        }
        taken[static_cast<size_t>(first)] = true;
        for (int w = first + 1; w < n; ++w) {
            if (taken[static_cast<size_t>(w)]) continue;
            taken[static_cast<size_t>(w)] = true;
            acc.emplace_back(first, w);
            self(self);
            acc.pop_back();
            taken[static_cast<size_t>(w)] = false;
        }
        taken[static_cast<size_t>(first)] = false;
    };
    rec(rec);
    return out;
}

/// Parity of the number of strand crossings, computed as interleaving chord
/// pairs with the 2k vertices on a circle (top row left to right, then bottom
/// row right to left).  Drawing-independent; the sign of the permutation for
/// through-strand-only diagrams.
inline int crossing_parity(const BrauerDiagram& d) {
    const int k = d.k();
    auto circ = [&](int code) { return code < k ? code : 3 * k - 1 - code; };
    int crossings = 0;
    const auto& edges = d.edges();
    for (size_t a = 0; a < edges.size(); ++a)
        for (size_t b = a + 1; b < edges.size(); ++b) {
            int a1 = circ(edges[a].first), a2 = circ(edges[a].second);
            int b1 = circ(edges[b].first), b2 = circ(edges[b].second);
            if (a1 > a2) std::swap(a1, a2);
            if (b1 > b2) std::swap(b1, b2);
            bool b1_inside = a1 < b1 && b1 < a2;
            bool b2_inside = a1 < b2 && b2 < a2;
            if (b1_inside != b2_inside) ++crossings;
        }
    return crossings % 2;
}

/// Wall after position s: through strands must stay on one side, horizontal
/// strands must cross.
inline bool is_walled(const BrauerDiagram& d, int wall) {
    if (wall < 0 || wall > d.k()) throw index_out_of_range("wall position out of range");
    const int k = d.k();
    for (auto [a, b] : d.edges()) {
        bool a_top = a < k, b_top = b < k;
        int ia = a_top ? a + 1 : a - k + 1;
        int ib = b_top ? b + 1 : b - k + 1;
        bool a_left = ia <= wall, b_left = ib <= wall;
        if (a_top != b_top) {
            if (a_left != b_left) return false; // through strand crosses
        } else {
            if (a_left == b_left) return false; // horizontal strand fails to cross
        }
    }
    return true;
}

/// Factorization of an m=2 diagram as theta(top) o bare o theta(bottom):
/// marks on through strands and top horizontals move to the upper identity
/// (horizontal marks at the rightmost vertex), marks on bottom horizontals
/// to the lower identity.
struct MarkedFactorization {
    std::set<int> top_marks;    // strand positions 1..k
    std::set<int> bottom_marks; // strand positions 1..k
    BrauerDiagram bare;
};

inline MarkedFactorization factor_marked(const LabeledDiagram& d) {
    if (d.m() != 2) throw bad_modulus("factor_marked requires m = 2");
    const int k = d.k();
    MarkedFactorization f;
    f.bare = d.strip_labels();
    for (const auto& e : d.edges()) {
        if (e.label == 0) continue;
        bool from_top = e.from < k;
        bool to_top = e.to < k;
        if (from_top && to_top) {
            f.top_marks.insert(e.to + 1); // rightmost top vertex
        } else if (!from_top && !to_top) {
            f.bottom_marks.insert(e.to - k + 1); // rightmost bottom vertex
        } else {
            f.top_marks.insert(e.from + 1); // through strand: its top endpoint
        }
    }
    return f;
}

/// Identity diagram with label 1 on the given strands (m = 2 theta layers).
inline LabeledDiagram theta_layer(const std::set<int>& marks, int k) {
    std::vector<DiagEdge> e;
    for (int i = 0; i < k; ++i) {
        int label = marks.count(i + 1) ? 1 : 0;
        e.push_back(DiagEdge{i, k + i, label});
    }
    return LabeledDiagram::from_code_edges(std::move(e), k, 2);
}

/// Reassemble theta(top) o bare o theta(bottom); used to validate factor_marked.
inline CompositionResult reassemble_marked(const MarkedFactorization& f) {
    LabeledDiagram top = theta_layer(f.top_marks, f.bare.k());
    LabeledDiagram mid = to_labeled(f.bare, 2);
    LabeledDiagram bot = theta_layer(f.bottom_marks, f.bare.k());
    CompositionResult inner = compose(mid, bot);
    CompositionResult outer = compose(top, inner.diagram);
    std::vector<int> loops = inner.loops;
    loops.insert(loops.end(), outer.loops.begin(), outer.loops.end());
    std::sort(loops.begin(), loops.end());
    return CompositionResult{std::move(loops), outer.diagram};
}

// ---------------------------------------------------------------------------
// Diagram text format: comma-separated edges "t1-b2:1,t2-t3,b1-b3:2".
// A missing ":<label>" means label 0.
// ---------------------------------------------------------------------------

inline std::string diagram_to_text(const LabeledDiagram& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& e : d.edges()) {
        if (!first) os << ",";
        first = false;
        Vertex vf = vertex_from_code(e.from, d.k());
        Vertex vt = vertex_from_code(e.to, d.k());
        os << (vf.row == Row::Top ? 't' : 'b') << vf.index << '-'
           << (vt.row == Row::Top ? 't' : 'b') << vt.index;
        if (e.label != 0) os << ':' << e.label;
    }
    return os.str();
}

namespace detail {
inline Vertex parse_vertex(const std::string& tok) {
    if (tok.size() < 2 || (tok[0] != 't' && tok[0] != 'b')) throw parse_error("bad vertex '" + tok + "'");
    int idx = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
        if (!isdigit(static_cast<unsigned char>(tok[i]))) throw parse_error("bad vertex '" + tok + "'");
        idx = idx * 10 + (tok[i] - '0');
    }
    if (idx < 1) throw parse_error("bad vertex index in '" + tok + "'");
    return Vertex{tok[0] == 't' ? Row::Top : Row::Bottom, idx};
}
} // namespace detail

inline LabeledDiagram diagram_from_text(const std::string& text, int k, int m) {
    std::vector<std::tuple<Vertex, Vertex, int>> raw;
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (!s.empty()) {
        size_t pos = 0;
        while (pos <= s.size()) {
            size_t comma = s.find(',', pos);
            std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (item.empty()) throw parse_error("empty edge in diagram text");
            int label = 0;
            size_t colon = item.find(':');
            if (colon != std::string::npos) {
                try {
                    label = std::stoi(item.substr(colon + 1));
                } catch (...) {
                    throw parse_error("bad label in '" + item + "'");
                }
                item = item.substr(0, colon);
            }
            size_t dash = item.find('-');
            if (dash == std::string::npos) throw parse_error("missing '-' in '" + item + "'");
            Vertex a = detail::parse_vertex(item.substr(0, dash));
            Vertex b = detail::parse_vertex(item.substr(dash + 1));
            raw.emplace_back(a, b, label);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return LabeledDiagram::canonicalize(raw, k, m);
}

} // namespace cybra

#endif
