#include "robin/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "robin/errors.hpp"

namespace robin {

namespace {

// ---------------------------------------------------------------------------
// GML tokenizer
// ---------------------------------------------------------------------------

enum class TokKind { key, integer, real, string, lbracket, rbracket, end };

struct Token {
    TokKind kind = TokKind::end;
    std::string text;
    long long int_value = 0;
    int line = 0;
};

class GmlLexer {
public:
    explicit GmlLexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space_and_comments();
        Token tok;
        tok.line = line_;
        if (pos_ >= text_.size()) return tok;

        const char c = text_[pos_];
        if (c == '[') {
            ++pos_;
            tok.kind = TokKind::lbracket;
            return tok;
        }
        if (c == ']') {
            ++pos_;
            tok.kind = TokKind::rbracket;
            return tok;
        }
        if (c == '"') return read_string();
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            return read_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return read_key();
        throw ParseError(line_, std::string("unexpected character '") + c + "'");
    }

private:
    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    Token read_string() {
        Token tok;
        tok.kind = TokKind::string;
        tok.line = line_;
        ++pos_;  // opening quote
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\n') ++line_;
            tok.text.push_back(text_[pos_]);
            ++pos_;
        }
        if (pos_ >= text_.size()) throw ParseError(tok.line, "unterminated string");
        ++pos_;  // closing quote
        return tok;
    }

    Token read_number() {
        Token tok;
        tok.line = line_;
        const std::size_t start = pos_;
        if (text_[pos_] == '-' || text_[pos_] == '+') ++pos_;
        bool is_real = false;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '.' || c == 'e' || c == 'E' || c == '-' || c == '+') {
                // exponent signs only make sense mid-number; accept loosely
                if (c == '-' || c == '+') {
                    const char prev = text_[pos_ - 1];
                    if (prev != 'e' && prev != 'E') break;
                }
                is_real = true;
                ++pos_;
            } else {
                break;
            }
        }
        tok.text = std::string(text_.substr(start, pos_ - start));
        if (is_real) {
            tok.kind = TokKind::real;
        } else {
            tok.kind = TokKind::integer;
            auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(),
                                           tok.int_value);
            if (ec != std::errc() || p != tok.text.data() + tok.text.size()) {
                throw ParseError(tok.line, "malformed integer '" + tok.text + "'");
            }
        }
        return tok;
    }

    Token read_key() {
        Token tok;
        tok.kind = TokKind::key;
        tok.line = line_;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                tok.text.push_back(c);
                ++pos_;
            } else {
                break;
            }
        }
        return tok;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

// ---------------------------------------------------------------------------
// GML parser (recursive over bracketed blocks)
// ---------------------------------------------------------------------------

struct GmlNode {
    long long id = 0;
    bool has_id = false;
    std::string label;
    bool has_label = false;
    long long value = 0;
    bool has_value = false;
    int line = 0;
};

struct GmlEdge {
    long long source = 0, target = 0;
    bool has_source = false, has_target = false;
    int line = 0;
};

class GmlParser {
public:
    explicit GmlParser(std::string_view text) : lexer_(text) { advance(); }

    Graph parse() {
        bool saw_graph = false;
        // Top level: sequence of key/value pairs (Creator "...", graph [...], ...).
        while (cur_.kind != TokKind::end) {
            if (cur_.kind != TokKind::key) {
                throw ParseError(cur_.line, "expected a key at top level");
            }
            const std::string key = cur_.text;
            const int key_line = cur_.line;
            advance();
            if (key == "graph") {
                if (cur_.kind != TokKind::lbracket) {
                    throw ParseError(cur_.line, "expected '[' after 'graph'");
                }
                parse_graph_block();
                saw_graph = true;
            } else {
                skip_value(key_line);
            }
        }
        if (!saw_graph) throw ParseError(cur_.line, "no 'graph' block found");
        return build();
    }

private:
    void advance() { cur_ = lexer_.next(); }

    void expect_scalar(int key_line) {
        if (cur_.kind == TokKind::integer || cur_.kind == TokKind::real ||
            cur_.kind == TokKind::string || cur_.kind == TokKind::key) {
            advance();
            return;
        }
        throw ParseError(key_line, "expected a value");
    }

    // Skips a scalar value or a balanced bracketed block.
    void skip_value(int key_line) {
        if (cur_.kind == TokKind::lbracket) {
            skip_block();
        } else {
            expect_scalar(key_line);
        }
    }

    void skip_block() {
        const int open_line = cur_.line;
        advance();  // consume '['
        while (cur_.kind != TokKind::rbracket) {
            if (cur_.kind == TokKind::end) {
                throw ParseError(open_line, "unbalanced brackets: block never closed");
            }
            if (cur_.kind == TokKind::lbracket) {
                skip_block();
            } else {
                advance();
            }
        }
        advance();  // consume ']'
    }

    void parse_graph_block() {
        const int open_line = cur_.line;
        advance();  // consume '['
        while (cur_.kind != TokKind::rbracket) {
            if (cur_.kind == TokKind::end) {
                throw ParseError(open_line, "unbalanced brackets: 'graph' never closed");
            }
            if (cur_.kind != TokKind::key) {
                throw ParseError(cur_.line, "expected a key inside 'graph'");
            }
            const std::string key = cur_.text;
            const int key_line = cur_.line;
            advance();
            if (key == "node") {
                parse_node(key_line);
            } else if (key == "edge") {
                parse_edge(key_line);
            } else {
                skip_value(key_line);
            }
        }
        advance();  // consume ']'
    }

    void parse_node(int node_line) {
        if (cur_.kind != TokKind::lbracket) {
            throw ParseError(cur_.line, "expected '[' after 'node'");
        }
        advance();
        GmlNode node;
        node.line = node_line;
        while (cur_.kind != TokKind::rbracket) {
            if (cur_.kind == TokKind::end) {
                throw ParseError(node_line, "unbalanced brackets: 'node' never closed");
            }
            if (cur_.kind != TokKind::key) {
                throw ParseError(cur_.line, "expected a key inside 'node'");
            }
            const std::string key = cur_.text;
            const int key_line = cur_.line;
            advance();
            if (key == "id" && cur_.kind == TokKind::integer) {
                node.id = cur_.int_value;
                node.has_id = true;
                advance();
            } else if (key == "label" && cur_.kind == TokKind::string) {
                node.label = cur_.text;
                node.has_label = true;
                advance();
            } else if (key == "value" && cur_.kind == TokKind::integer) {
                node.value = cur_.int_value;
                node.has_value = true;
                advance();
            } else {
                skip_value(key_line);
            }
        }
        advance();
        if (!node.has_id) throw ParseError(node_line, "node without 'id'");
        nodes_.push_back(std::move(node));
    }

    void parse_edge(int edge_line) {
        if (cur_.kind != TokKind::lbracket) {
            throw ParseError(cur_.line, "expected '[' after 'edge'");
        }
        advance();
        GmlEdge edge;
        edge.line = edge_line;
        while (cur_.kind != TokKind::rbracket) {
            if (cur_.kind == TokKind::end) {
                throw ParseError(edge_line, "unbalanced brackets: 'edge' never closed");
            }
            if (cur_.kind != TokKind::key) {
                throw ParseError(cur_.line, "expected a key inside 'edge'");
            }
            const std::string key = cur_.text;
            const int key_line = cur_.line;
            advance();
            if (key == "source" && cur_.kind == TokKind::integer) {
                edge.source = cur_.int_value;
                edge.has_source = true;
                advance();
            } else if (key == "target" && cur_.kind == TokKind::integer) {
                edge.target = cur_.int_value;
                edge.has_target = true;
                advance();
            } else {
                skip_value(key_line);
            }
        }
        advance();
        if (!edge.has_source) throw ParseError(edge_line, "edge without 'source'");
        if (!edge.has_target) throw ParseError(edge_line, "edge without 'target'");
        edges_.push_back(edge);
    }

    Graph build() const {
        std::unordered_map<long long, int> index_of_id;
        index_of_id.reserve(nodes_.size());
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            const auto [it, inserted] =
                index_of_id.emplace(nodes_[i].id, static_cast<int>(i));
            if (!inserted) {
                throw ParseError(nodes_[i].line,
                                 "duplicate node id " + std::to_string(nodes_[i].id));
            }
        }

        std::vector<Edge> edges;
        edges.reserve(edges_.size());
        for (const GmlEdge& e : edges_) {
            const auto s = index_of_id.find(e.source);
            if (s == index_of_id.end()) {
                throw ReferenceError(e.line, "edge references unknown node id " +
                                                 std::to_string(e.source));
            }
            const auto t = index_of_id.find(e.target);
            if (t == index_of_id.end()) {
                throw ReferenceError(e.line, "edge references unknown node id " +
                                                 std::to_string(e.target));
            }
            edges.push_back({s->second, t->second});
        }

        std::vector<std::string> labels;
        bool any_label = false;
        for (const GmlNode& n : nodes_) any_label = any_label || n.has_label;
        if (any_label) {
            labels.reserve(nodes_.size());
            for (const GmlNode& n : nodes_) labels.push_back(n.label);
        }

        std::vector<int> ground_truth;
        bool all_values = !nodes_.empty();
        for (const GmlNode& n : nodes_) all_values = all_values && n.has_value;
        if (all_values) {
            ground_truth.reserve(nodes_.size());
            for (const GmlNode& n : nodes_) {
                ground_truth.push_back(static_cast<int>(n.value));
            }
        }

        return Graph(static_cast<int>(nodes_.size()), std::move(edges),
                     std::move(labels), std::move(ground_truth));
    }

    GmlLexer lexer_;
    Token cur_;
    std::vector<GmlNode> nodes_;
    std::vector<GmlEdge> edges_;
};

// ---------------------------------------------------------------------------
// Edge list
// ---------------------------------------------------------------------------

struct TokenLine {
    std::vector<std::string> tokens;
    int line = 0;
};

std::vector<TokenLine> tokenize_lines(std::string_view text) {
    std::vector<TokenLine> lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                           : eol - pos);
        ++line_no;
        TokenLine tl;
        tl.line = line_no;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start) tl.tokens.emplace_back(line.substr(start, i - start));
        }
        if (!tl.tokens.empty()) lines.push_back(std::move(tl));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

std::optional<long long> parse_int(std::string_view s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
}

// Detects the "n m" headered format emitted by write_edgelist: first line two
// non-negative integers, exactly m further lines each holding one integer pair.
std::optional<Graph> try_parse_headered(const std::vector<TokenLine>& lines) {
    if (lines.empty() || lines[0].tokens.size() != 2) return std::nullopt;
    const auto n = parse_int(lines[0].tokens[0]);
    const auto m = parse_int(lines[0].tokens[1]);
    if (!n || !m || *n < 0 || *m < 0) return std::nullopt;
    if (static_cast<long long>(lines.size()) - 1 != *m) return std::nullopt;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].tokens.size() != 2) return std::nullopt;
        if (!parse_int(lines[i].tokens[0]) || !parse_int(lines[i].tokens[1])) {
            return std::nullopt;
        }
    }
    // Shape matches: the file declared itself headered, so range errors are
    // reference errors rather than a silent fall-back to label parsing.
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(*m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const long long u = *parse_int(lines[i].tokens[0]);
        const long long v = *parse_int(lines[i].tokens[1]);
        if (u >= *n || v >= *n) {
            throw ReferenceError(lines[i].line, "edge endpoint exceeds declared node count");
        }
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    return Graph(static_cast<int>(*n), std::move(edges));
}

}  // namespace

Graph parse_gml(std::string_view text) { return GmlParser(text).parse(); }

Graph parse_gml(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_gml(std::string_view(buffer.str()));
}

Graph parse_edgelist(std::string_view text) {
    const std::vector<TokenLine> lines = tokenize_lines(text);
    if (auto headered = try_parse_headered(lines)) return std::move(*headered);

    std::unordered_map<std::string, int> index_of_label;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    auto intern = [&](const std::string& label) {
        const auto [it, inserted] =
            index_of_label.emplace(label, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };
    for (const TokenLine& tl : lines) {
        if (tl.tokens.size() % 2 != 0) {
            throw ParseError(tl.line, "odd token count on line");
        }
        for (std::size_t i = 0; i + 1 < tl.tokens.size(); i += 2) {
            const int u = intern(tl.tokens[i]);
            const int v = intern(tl.tokens[i + 1]);
            edges.push_back({u, v});
        }
    }
    const int node_count = static_cast<int>(labels.size());
    return Graph(node_count, std::move(edges), std::move(labels), {});
}

Graph parse_edgelist(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_edgelist(std::string_view(buffer.str()));
}

std::string write_edgelist(const Graph& g) {
    std::string out;
    out += std::to_string(g.node_count());
    out += ' ';
    out += std::to_string(g.edge_count());
    out += '\n';
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.first);
        out += ' ';
        out += std::to_string(e.second);
        out += '\n';
    }
    return out;
}

}  // namespace robin
