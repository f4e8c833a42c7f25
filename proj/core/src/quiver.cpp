#include "qs/quiver.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "qs/error.hpp"

namespace qs {

namespace {

void validate(const std::vector<Vertex>& vertices, const std::vector<Arrow>& arrows) {
  std::set<std::string> names;
  for (const auto& v : vertices) {
    if (v.mult < 1) throw Error(ErrorCode::InvalidValue, "vertex '" + v.name + "' needs a positive multiplicity");
    if (!names.insert(v.name).second) throw Error(ErrorCode::DuplicateName, "vertex '" + v.name + "' declared twice");
  }
  std::set<std::string> arrow_names;
  for (const auto& a : arrows) {
    if (!arrow_names.insert(a.name).second) {
      throw Error(ErrorCode::DuplicateName, "arrow '" + a.name + "' declared twice");
    }
    if (a.source >= vertices.size() || a.target >= vertices.size()) {
      throw Error(ErrorCode::UnknownVertex, "arrow '" + a.name + "' has an endpoint outside the vertex set");
    }
    if (a.source == a.target) throw Error(ErrorCode::EdgeLoopForbidden, "arrow '" + a.name + "' is an edge-loop");
  }
}

struct Token {
  enum Kind { Word, LBrace, RBrace, Colon, Arrow, Semicolon, End } kind;
  std::string text;
  SourcePos pos;
};

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t k = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t s = 0; s < n; ++s) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++k;
    }
  };
  while (k < text.size()) {
    char c = text[k];
    SourcePos pos{line, col};
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (k < text.size() && text[k] != '\n') advance(1);
    } else if (c == '{') {
      out.push_back({Token::LBrace, "{", pos});
      advance(1);
    } else if (c == '}') {
      out.push_back({Token::RBrace, "}", pos});
      advance(1);
    } else if (c == ':') {
      out.push_back({Token::Colon, ":", pos});
      advance(1);
    } else if (c == ';') {
      out.push_back({Token::Semicolon, ";", pos});
      advance(1);
    } else if (c == '-' && k + 1 < text.size() && text[k + 1] == '>') {
      out.push_back({Token::Arrow, "->", pos});
      advance(2);
    } else if (word_char(c)) {
      std::size_t start = k;
      while (k < text.size() && word_char(text[k])) advance(1);
      out.push_back({Token::Word, std::string(text.substr(start, k - start)), pos});
    } else {
      throw Error(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'", pos);
    }
  }
  out.push_back({Token::End, "end of input", {line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  QuiverMult run() {
    expect_keyword("quiver");
    expect(Token::LBrace, "'{'");
    while (peek().kind != Token::RBrace) {
      const Token& t = peek();
      if (t.kind == Token::Semicolon) {
        ++pos_;
      } else if (t.kind == Token::Word && t.text == "vertex") {
        ++pos_;
        parse_vertex();
      } else if (t.kind == Token::Word && t.text == "arrow") {
        ++pos_;
        parse_arrow();
      } else {
        throw Error(ErrorCode::SyntaxError, "expected 'vertex', 'arrow' or '}', found '" + t.text + "'", t.pos);
      }
    }
    ++pos_;
    if (peek().kind != Token::End) throw Error(ErrorCode::SyntaxError, "trailing input after '}'", peek().pos);
    return build();
  }

 private:
  struct PendingArrow {
    Token name, source, target;
  };

  const Token& peek() const { return tokens_[pos_]; }

  const Token& expect(Token::Kind kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind) throw Error(ErrorCode::SyntaxError, "expected " + what + ", found '" + t.text + "'", t.pos);
    ++pos_;
    return t;
  }

  void expect_keyword(const std::string& word) {
    const Token& t = peek();
    if (t.kind != Token::Word || t.text != word) {
      throw Error(ErrorCode::SyntaxError, "expected '" + word + "', found '" + t.text + "'", t.pos);
    }
    ++pos_;
  }

  void parse_vertex() {
    Token name = expect(Token::Word, "vertex name");
    expect_keyword("mult");
    Token value = expect(Token::Word, "multiplicity");
    bool digits = !value.text.empty() && value.text.size() <= 6;
    for (char c : value.text) digits = digits && std::isdigit(static_cast<unsigned char>(c));
    int mult = digits ? std::stoi(value.text) : 0;
    if (mult < 1) throw Error(ErrorCode::SyntaxError, "multiplicity must be a positive integer", value.pos);
    if (!index_.emplace(name.text, vertices_.size()).second) {
      throw Error(ErrorCode::DuplicateName, "vertex '" + name.text + "' declared twice", name.pos);
    }
    vertices_.push_back({name.text, mult});
  }

  void parse_arrow() {
    Token name = expect(Token::Word, "arrow name");
    expect(Token::Colon, "':'");
    Token source = expect(Token::Word, "source vertex");
    expect(Token::Arrow, "'->'");
    Token target = expect(Token::Word, "target vertex");
    if (!arrow_names_.insert(name.text).second) {
      throw Error(ErrorCode::DuplicateName, "arrow '" + name.text + "' declared twice", name.pos);
    }
    pending_.push_back({name, source, target});
  }

  std::size_t resolve(const Token& t) const {
    auto it = index_.find(t.text);
    if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + t.text + "'", t.pos);
    return it->second;
  }

  QuiverMult build() {
    std::vector<Arrow> arrows;
    for (const auto& p : pending_) {
      std::size_t s = resolve(p.source);
      std::size_t t = resolve(p.target);
      if (s == t) throw Error(ErrorCode::EdgeLoopForbidden, "arrow '" + p.name.text + "' is an edge-loop", p.name.pos);
      arrows.push_back({p.name.text, s, t});
    }
    return QuiverMult(vertices_, std::move(arrows));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Vertex> vertices_;
  std::map<std::string, std::size_t> index_;
  std::set<std::string> arrow_names_;
  std::vector<PendingArrow> pending_;
};

}  // namespace

QuiverMult::QuiverMult(std::vector<Vertex> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  validate(vertices_, arrows_);
}

std::vector<int> QuiverMult::multiplicities() const {
  std::vector<int> out;
  for (const auto& v : vertices_) out.push_back(v.mult);
  return out;
}

std::optional<std::size_t> QuiverMult::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t QuiverMult::vertex_index(std::string_view name) const {
  auto i = find_vertex(name);
  if (!i) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
  return *i;
}

bool operator==(const QuiverMult& a, const QuiverMult& b) {
  if (a.vertices_.size() != b.vertices_.size() || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    if (a.vertices_[i].name != b.vertices_[i].name || a.vertices_[i].mult != b.vertices_[i].mult) return false;
  }
  for (std::size_t h = 0; h < a.arrows_.size(); ++h) {
    const auto& x = a.arrows_[h];
    const auto& y = b.arrows_[h];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

QuiverMult parse_quiver(std::string_view text) { return Parser(tokenize(text)).run(); }

std::string serialize_quiver(const QuiverMult& q) {
  std::string out = "quiver {\n";
  for (const auto& v : q.vertices()) out += "  vertex " + v.name + " mult " + std::to_string(v.mult) + "\n";
  for (const auto& a : q.arrows()) {
    out += "  arrow " + a.name + " : " + q.vertices()[a.source].name + " -> " + q.vertices()[a.target].name + "\n";
  }
  return out + "}\n";
}

std::string to_dot(const QuiverMult& q) {
  std::string out = "digraph quiver {\n";
  for (const auto& v : q.vertices()) {
    out += "  \"" + v.name + "\" [label=\"" + v.name + " (d=" + std::to_string(v.mult) + ")\"];\n";
  }
  for (const auto& a : q.arrows()) {
    out += "  \"" + q.vertices()[a.source].name + "\" -> \"" + q.vertices()[a.target].name + "\" [label=\"" + a.name +
           "\"];\n";
  }
  return out + "}\n";
}

DoubleQuiver::DoubleQuiver(const QuiverMult& q) {
  const std::size_t m = q.arrows().size();
  arrows_.resize(2 * m);
  for (std::size_t h = 0; h < m; ++h) {
    const Arrow& a = q.arrows()[h];
    const int ds = q.mult(a.source);
    const int dt = q.mult(a.target);
    const int dh = std::gcd(ds, dt);
    arrows_[h] = {a.source, a.target, 1, h, dh, dt / dh, ds / dh};
    arrows_[h + m] = {a.target, a.source, -1, h, dh, ds / dh, dt / dh};
  }
}

std::vector<std::size_t> DoubleQuiver::into(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < arrows_.size(); ++h) {
    if (arrows_[h].target == i) out.push_back(h);
  }
  return out;
}

int gcd_mult(const QuiverMult& q, std::size_t i, std::size_t j) { return std::gcd(q.mult(i), q.mult(j)); }

ZMatrix CartanData::symmetrized() const {
  ZMatrix out = cartan;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) *= mult[i];
  }
  return out;
}

CartanData cartan(const QuiverMult& q) {
  const std::size_t n = q.vertex_count();
  CartanData out;
  out.adjacency = ZMatrix(n, n);
  out.reduced = QMatrix(n, n);
  out.cartan = ZMatrix(n, n);
  out.mult = q.multiplicities();
  for (const auto& a : q.arrows()) {
    out.adjacency(a.source, a.target) += 1;
    out.adjacency(a.target, a.source) += 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int dij = gcd_mult(q, i, j);
      const std::int64_t a = out.adjacency(i, j);
      out.reduced(i, j) = GaussQ(mpq_class(a, dij));
      // c_ij = 2 delta_ij - a_ij d_j / d_ij
      out.cartan(i, j) = (i == j ? 2 : 0) - a * (q.mult(j) / dij);
    }
  }
  return out;
}

std::int64_t bilinear(const QuiverMult& q, const DimVector& v, const DimVector& w) {
  const std::size_t n = q.vertex_count();
  if (v.size() != n || w.size() != n) throw Error(ErrorCode::LengthMismatch, "dimension vector length");
  ZMatrix dc = cartan(q).symmetrized();
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      acc = detail::checked_add(acc, detail::checked_mul(detail::checked_mul(v[i], dc(i, j)), w[j]));
    }
  }
  return acc;
}

std::int64_t expected_dim(const QuiverMult& q, const DimVector& v) {
  for (auto x : v) {
    if (x < 0) throw Error(ErrorCode::NegativeDimension, "dimension vector has a negative entry");
  }
  return 2 - bilinear(q, v, v);
}

}  // namespace qs
