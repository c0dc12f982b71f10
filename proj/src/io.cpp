#include "snark/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "snark/graphs.hpp"

namespace snark {

namespace {

constexpr std::string_view graph6_header = ">>graph6<<";

void put_bits(std::string& out, std::uint64_t value, int groups) {
    for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(63 + ((value >> (6 * k)) & 63)));
}

// ---- multipole documents -------------------------------------------------

struct Lines {
    std::vector<std::string> text;
    std::vector<std::size_t> number;
    std::size_t pos = 0;

    explicit Lines(std::string_view doc) {
        std::size_t n = 0, start = 0;
        while (start <= doc.size()) {
            const auto end = std::min(doc.find('\n', start), doc.size());
            ++n;
            std::string line(doc.substr(start, end - start));
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first != std::string::npos && line[first] != '#') {
                text.push_back(line.substr(first));
                number.push_back(n);
            }
            start = end + 1;
        }
    }

    [[nodiscard]] bool done() const { return pos >= text.size(); }
    [[nodiscard]] std::size_t line() const { return pos < number.size() ? number[pos] : (number.empty() ? 1 : number.back() + 1); }

    std::vector<std::string> next(std::string_view what) {
        if (done()) throw ParseError("expected " + std::string(what) + " but the document ended", line());
        std::istringstream in(text[pos++]);
        std::vector<std::string> words;
        for (std::string w; in >> w;) words.push_back(w);
        return words;
    }
    [[nodiscard]] std::string peek_word() const {
        if (done()) return {};
        std::istringstream in(text[pos]);
        std::string w;
        in >> w;
        return w;
    }
};

int parse_int(const std::string& s, std::size_t line, std::string_view what) {
    int v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) throw ParseError("bad " + std::string(what) + " '" + s + "'", line);
    return v;
}

struct Block {
    Multipole base;
    std::optional<std::vector<std::string>> input, output;
    std::size_t first_line = 0;
};

Block parse_block(Lines& in) {
    Block b;
    b.first_line = in.line();
    const auto head = in.next("multipole header");
    if (head.size() != 3 || head[0] != "multipole") throw ParseError("expected 'multipole <vertices> <edges>'", b.first_line);
    const int n = parse_int(head[1], b.first_line, "vertex count");
    const int m = parse_int(head[2], b.first_line, "edge count");
    if (n < 0 || m < 0) throw ParseError("negative count", b.first_line);
    std::vector<Edge> edges;
    for (int e = 0; e < m; ++e) {
        const auto line = in.line();
        const auto w = in.next("edge line");
        if (w.size() != 3 || w[0] != "e") throw ParseError("expected 'e <end> <end>'", line);
        Edge ed;
        for (int k = 1; k <= 2; ++k) {
            const auto& tok = w[static_cast<std::size_t>(k)];
            if (tok.size() > 1 && tok[0] == 'v') {
                const int v = parse_int(tok.substr(1), line, "vertex");
                (ed.a < 0 ? ed.a : ed.b) = v;
            } else if (tok.size() > 2 && tok.starts_with("d:")) {
                if (!ed.label.empty()) throw ParseError("edge with two free ends", line);
                ed.label = tok.substr(2);
            } else {
                throw ParseError("bad edge end '" + tok + "'", line);
            }
        }
        edges.push_back(std::move(ed));
    }
    while (!in.done() && (in.peek_word() == "input" || in.peek_word() == "output")) {
        auto w = in.next("connector");
        auto& slot = w[0] == "input" ? b.input : b.output;
        if (slot) throw ParseError("connector listed twice", in.line() - 1);
        slot.emplace(w.begin() + 1, w.end());
    }
    const auto end_line = in.line();
    const auto tail = in.next("'end'");
    if (tail.size() != 1 || tail[0] != "end") throw ParseError("expected 'end'", end_line);
    try {
        b.base = Multipole(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), b.first_line);
    }
    return b;
}

Dipole block_dipole(Block&& b) {
    if (!b.input || !b.output) throw ParseError("dipole needs input and output lines", b.first_line);
    try {
        return Dipole(std::move(b.base), std::move(*b.input), std::move(*b.output));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), b.first_line);
    }
}

void expect_done(const Lines& in) {
    if (!in.done()) throw ParseError("unexpected content after the document", in.line());
}

void write_block(std::ostringstream& out, const Multipole& m, const Dipole* d) {
    out << "multipole " << m.vertex_count() << ' ' << m.edge_count() << '\n';
    for (const auto& ed : m.edges()) {
        out << "e v" << ed.a << ' ';
        if (ed.dangling())
            out << "d:" << ed.label << '\n';
        else
            out << 'v' << ed.b << '\n';
    }
    if (d) {
        out << "input";
        for (const auto& l : d->input()) out << ' ' << l;
        out << "\noutput";
        for (const auto& l : d->output()) out << ' ' << l;
        out << '\n';
    }
    out << "end\n";
}

std::optional<Dipole> builtin_dipole(std::string_view name) {
    if (name == "decollineator") return petersen_decollineator();
    if (name == "q-dipole") return petersen_q_dipole();
    if (name == "superedge") return basic_superedge();
    if (name == "pass-through") return pass_through_dipole();
    return std::nullopt;
}

}  // namespace

SimpleGraph parse_graph6(std::string_view line) {
    std::size_t offset = 0;
    if (line.starts_with(graph6_header)) offset = graph6_header.size();
    std::size_t end = line.size();
    while (end > offset && (line[end - 1] == '\n' || line[end - 1] == '\r')) --end;
    auto byte = [&](std::size_t i) -> int {
        if (i >= end) throw ParseError("graph6 line is truncated", i);
        const int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range", i);
        return c - 63;
    };
    auto groups = [&](std::size_t from, int count) {
        std::uint64_t v = 0;
        for (int k = 0; k < count; ++k) v = (v << 6) | static_cast<std::uint64_t>(byte(from + static_cast<std::size_t>(k)));
        return v;
    };
    std::uint64_t n = 0;
    std::size_t pos = offset;
    if (byte(pos) < 63) {
        n = static_cast<std::uint64_t>(byte(pos));
        pos += 1;
    } else if (byte(pos + 1) < 63) {
        n = groups(pos + 1, 3);
        pos += 4;
    } else {
        n = groups(pos + 2, 6);
        pos += 8;
    }
    if (n > 100'000) throw ParseError("graph6 vertex count too large", offset);
    SimpleGraph g;
    g.vertices = static_cast<int>(n);
    const std::uint64_t bits = n * (n - (n > 0)) / 2;
    const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
    std::uint64_t k = 0;
    for (std::size_t b = 0; b < bytes; ++b) {
        const int x = byte(pos + b);
        for (int s = 5; s >= 0; --s, ++k) {
            if (!(x >> s & 1)) continue;
            if (k >= bits) throw ParseError("nonzero graph6 padding", pos + b);
            // k-th bit of the upper triangle in column order
            std::uint64_t j = 1;
            while (j * (j + 1) / 2 <= k) ++j;
            const std::uint64_t i = k - j * (j - 1) / 2;
            g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    if (pos + bytes != end) throw ParseError("trailing bytes after graph6 data", pos + bytes);
    return g;
}

std::string write_graph6(const SimpleGraph& g) {
    const auto n = static_cast<std::uint64_t>(g.vertices);
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        put_bits(out, n, 3);
    } else {
        out.append(2, static_cast<char>(126));
        put_bits(out, n, 6);
    }
    const std::uint64_t bits = n * (n - (n > 0)) / 2;
    std::vector<char> adj(static_cast<std::size_t>(bits), 0);
    for (auto [a, b] : g.edges) {
        const auto i = static_cast<std::uint64_t>(std::min(a, b)), j = static_cast<std::uint64_t>(std::max(a, b));
        if (i == j || j >= n) throw std::invalid_argument("graph6: edge out of range or loop");
        auto& slot = adj[static_cast<std::size_t>(j * (j - 1) / 2 + i)];
        if (slot) throw std::invalid_argument("graph6: parallel edges");
        slot = 1;
    }
    for (std::size_t k = 0; k < adj.size(); k += 6) {
        int x = 0;
        for (std::size_t s = 0; s < 6; ++s) x = (x << 1) | (k + s < adj.size() ? adj[k + s] : 0);
        out.push_back(static_cast<char>(63 + x));
    }
    return out;
}

std::string write_graph6(const Graph& g) {
    require_graph(g, "graph6");
    SimpleGraph s{g.vertex_count(), {}};
    for (const auto& e : g.edges()) s.edges.emplace_back(e.a, e.b);
    return write_graph6(s);
}

Graph to_cubic_graph(const SimpleGraph& g) {
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges) edges.push_back(Edge::inner(a, b));
    return Graph(g.vertices, std::move(edges));
}

std::string write_multipole(const Multipole& m) {
    std::ostringstream out;
    write_block(out, m, nullptr);
    return out.str();
}

std::string write_dipole(const Dipole& d) {
    std::ostringstream out;
    write_block(out, d.base(), &d);
    return out.str();
}

std::string write_plan(const SuperpositionPlan& plan) {
    std::ostringstream out;
    out << "plan " << plan.library.size() << "\nbase\n";
    write_block(out, plan.base, nullptr);
    for (std::size_t i = 0; i < plan.library.size(); ++i) {
        out << "superedge " << i << '\n';
        write_block(out, plan.library[i].base(), &plan.library[i]);
    }
    for (std::size_t e = 0; e < plan.edges.size(); ++e) {
        const auto& at = plan.edges[e];
        out << "attach " << e << ' ' << at.superedge << ' ' << at.input_lift[0] << ' ' << at.input_lift[1] << ' '
            << at.output_lift[0] << ' ' << at.output_lift[1] << '\n';
    }
    out << "end\n";
    return out.str();
}

Multipole parse_multipole(std::string_view text) {
    Lines in(text);
    auto b = parse_block(in);
    expect_done(in);
    return std::move(b.base);
}

Dipole parse_dipole(std::string_view text) {
    Lines in(text);
    auto d = block_dipole(parse_block(in));
    expect_done(in);
    return d;
}

SuperpositionPlan parse_plan(std::string_view text) {
    Lines in(text);
    const auto head_line = in.line();
    const auto head = in.next("plan header");
    if (head.size() != 2 || head[0] != "plan") throw ParseError("expected 'plan <library size>'", head_line);
    const int count = parse_int(head[1], head_line, "library size");
    if (count < 0) throw ParseError("negative library size", head_line);
    SuperpositionPlan plan;
    if (in.next("'base'") != std::vector<std::string>{"base"}) throw ParseError("expected 'base'", in.line() - 1);
    auto base = parse_block(in);
    if (!base.base.is_graph()) throw ParseError("plan base has dangling edges", base.first_line);
    plan.base = std::move(base.base);
    for (int i = 0; i < count; ++i) {
        const auto line = in.line();
        const auto w = in.next("superedge header");
        if (w.size() != 2 || w[0] != "superedge" || parse_int(w[1], line, "superedge index") != i)
            throw ParseError("expected 'superedge " + std::to_string(i) + "'", line);
        plan.library.push_back(block_dipole(parse_block(in)));
    }
    std::map<int, SuperedgeAttachment> attached;
    while (in.peek_word() == "attach") {
        const auto line = in.line();
        const auto w = in.next("attach line");
        if (w.size() != 7) throw ParseError("expected 'attach <edge> <superedge> <lift> <lift> <lift> <lift>'", line);
        std::array<int, 6> x{};
        for (std::size_t k = 0; k < 6; ++k) x[k] = parse_int(w[k + 1], line, "attach field");
        if (x[0] < 0 || x[0] >= plan.base.edge_count() || attached.contains(x[0])) throw ParseError("bad or repeated base edge", line);
        if (x[1] < 0 || x[1] >= count) throw ParseError("unknown superedge", line);
        attached[x[0]] = SuperedgeAttachment{x[1], {x[2], x[3]}, {x[4], x[5]}};
    }
    const auto end_line = in.line();
    if (in.next("'end'") != std::vector<std::string>{"end"}) throw ParseError("expected 'end'", end_line);
    expect_done(in);
    if (static_cast<int>(attached.size()) != plan.base.edge_count()) throw ParseError("every base edge needs an attach line", end_line);
    for (auto& [e, at] : attached) plan.edges.push_back(at);
    return plan;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Graph load_graph(const std::string& spec) {
    if (auto g = builtin_graph(spec)) return *g;
    const auto text = read_file(spec);
    if (text.find("multipole") != std::string::npos) {
        auto m = parse_multipole(text);
        require_graph(m, spec);
        return m;
    }
    const auto nl = text.find('\n');
    return to_cubic_graph(parse_graph6(std::string_view(text).substr(0, nl)));
}

Dipole load_dipole(const std::string& spec) {
    if (auto d = builtin_dipole(spec)) return *d;
    return parse_dipole(read_file(spec));
}

SuperpositionPlan load_plan(const std::string& spec) {
    if (auto g = builtin_graph(spec)) return canonical_plan(*g);
    return parse_plan(read_file(spec));
}

}  // namespace snark
