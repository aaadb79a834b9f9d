#include "intreg/encoding.hpp"

#include <algorithm>
#include <map>

namespace intreg {

EncodingError::EncodingError(const std::string& msg, std::size_t position)
    : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}

Vertex Token::vertex() const {
    if (count > Nat(INT64_MAX)) throw EncodingError("vertex index too large", 0);
    return static_cast<Vertex>(count);
}

Token threshold_token(Nat k) { return {TokenKind::Threshold, std::move(k)}; }
Token left_token(Vertex i) { return {TokenKind::LeftVertex, Nat(i)}; }
Token right_token(Vertex i) { return {TokenKind::RightVertex, Nat(i)}; }

Word to_word(const Token& t) {
    if (t.length() > kMaxLiteralLength) throw EncodingError("token too long to materialize", 0);
    auto n = static_cast<std::size_t>(t.count);
    Word w;
    w.reserve(n + 2);
    w.push_back(Symbol::Start);
    w.insert(w.end(), n, t.kind == TokenKind::Threshold ? Symbol::One : Symbol::A);
    w.push_back(t.kind == TokenKind::LeftVertex ? Symbol::Hash : Symbol::Dollar);
    return w;
}

Word to_word(const TokenWord& tw) {
    if (length(tw) > kMaxLiteralLength) throw EncodingError("word too long to materialize", 0);
    Word w;
    for (const auto& t : tw) {
        Word part = to_word(t);
        w.insert(w.end(), part.begin(), part.end());
    }
    return w;
}

Nat length(const TokenWord& tw) {
    Nat n = 0;
    for (const auto& t : tw) n += t.length();
    return n;
}

std::string render(const Token& t, std::size_t max_literal) {
    if (t.length() <= max_literal) return to_string(to_word(t));
    char body = t.kind == TokenKind::Threshold ? '1' : 'a';
    char end = t.kind == TokenKind::LeftVertex ? '#' : '$';
    return std::string(">") + body + "^{" + t.count.str() + "}" + end;
}

std::string render(const TokenWord& tw, std::size_t max_literal) {
    std::string out;
    for (const auto& t : tw) out += render(t, max_literal);
    return out;
}

namespace {
// Per-token comparison key: '1' < 'a' and '#' < '$', so tokens of equal
// length compare by kind first.
int symbol_rank(const Token& t) { return t.kind == TokenKind::Threshold ? 0 : 1; }

// Lexicographic comparison of two token sequences with equal total length.
bool lex_less(const TokenWord& a, const TokenWord& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Token& x = a[i];
        const Token& y = b[i];
        if (x == y) continue;
        if (symbol_rank(x) != symbol_rank(y)) return symbol_rank(x) < symbol_rank(y);
        // Same body letter: the shorter body reaches its terminator first and
        // terminators '#' and '$' sort below both '1' and 'a'.
        if (x.count != y.count) return x.count < y.count;
        return x.kind == TokenKind::LeftVertex;
    }
    return a.size() < b.size();
}
}  // namespace

bool shortlex_less(const TokenWord& a, const TokenWord& b) {
    Nat la = length(a);
    Nat lb = length(b);
    if (la != lb) return la < lb;
    return lex_less(a, b);
}

const Nfa& enc_nfa() {
    static const Nfa m = [] {
        using S = Symbol;
        std::vector<Transition> ts = {
            {0, S::Start, 1}, {1, S::One, 1},   {1, S::Dollar, 2}, {2, S::Start, 3}, {3, S::A, 3},
            {3, S::Hash, 4},  {4, S::Start, 5}, {5, S::A, 5},      {5, S::Dollar, 2},
        };
        return Nfa(6, 0, {2}, ts);
    }();
    return m;
}

const Nfa& threshold_tokens_nfa() {
    static const Nfa m = compile_regex(">1*$");
    return m;
}
const Nfa& vertex_tokens_nfa() {
    static const Nfa m = compile_regex(">a*(#|$)");
    return m;
}
const Nfa& left_tokens_nfa() {
    static const Nfa m = compile_regex(">a*#");
    return m;
}
const Nfa& right_tokens_nfa() {
    static const Nfa m = compile_regex(">a*$");
    return m;
}

namespace {
std::optional<Token> read_token(const Word& w, Symbol body) {
    if (w.size() < 2 || w.front() != Symbol::Start) return std::nullopt;
    for (std::size_t i = 1; i + 1 < w.size(); ++i)
        if (w[i] != body) return std::nullopt;
    Nat n = w.size() - 2;
    if (w.back() == Symbol::Dollar) return Token{body == Symbol::One ? TokenKind::Threshold : TokenKind::RightVertex, n};
    if (w.back() == Symbol::Hash && body == Symbol::A) return Token{TokenKind::LeftVertex, n};
    return std::nullopt;
}
}  // namespace

std::optional<Token> as_threshold_token(const Word& w) { return read_token(w, Symbol::One); }
std::optional<Token> as_vertex_token(const Word& w) { return read_token(w, Symbol::A); }

TokenWord tokenize(const Word& w) {
    TokenWord out;
    std::size_t i = 0;
    auto fail = [&](const char* what) -> EncodingError { return EncodingError(what, i + 1); };
    auto expect = [&](Symbol s, const char* what) {
        if (i >= w.size() || w[i] != s) throw fail(what);
        ++i;
    };
    auto run_of = [&](Symbol s) {
        std::size_t n = 0;
        while (i < w.size() && w[i] == s) ++i, ++n;
        return n;
    };
    expect(Symbol::Start, "expected '>' opening the threshold token");
    std::size_t k = run_of(Symbol::One);
    expect(Symbol::Dollar, "expected '$' closing the threshold token");
    out.push_back(threshold_token(k));
    while (i < w.size()) {
        expect(Symbol::Start, "expected '>' opening a left vertex token");
        std::size_t p = run_of(Symbol::A);
        expect(Symbol::Hash, "expected '#' closing a left vertex token");
        expect(Symbol::Start, "expected '>' opening a right vertex token");
        std::size_t q = run_of(Symbol::A);
        expect(Symbol::Dollar, "expected '$' closing a right vertex token");
        out.push_back(left_token(static_cast<Vertex>(p)));
        out.push_back(right_token(static_cast<Vertex>(q)));
    }
    return out;
}

TokenWord parse_compact(const std::string& text) {
    const std::string head = ">1^{";
    if (text.rfind(head, 0) != 0) return tokenize(to_word(text));
    auto close = text.find("}$", head.size());
    if (close == std::string::npos) throw EncodingError("unterminated compact threshold", head.size());
    Nat k(text.substr(head.size(), close - head.size()));
    TokenWord tw = tokenize(to_word(">$" + text.substr(close + 2)));
    tw[0].count = k;
    return tw;
}

namespace {
void check_shape(const TokenWord& tw) {
    if (tw.empty() || tw[0].kind != TokenKind::Threshold || tw.size() % 2 == 0)
        throw EncodingError("token sequence is not an encoding", 0);
    for (std::size_t i = 1; i < tw.size(); i += 2)
        if (tw[i].kind != TokenKind::LeftVertex || tw[i + 1].kind != TokenKind::RightVertex)
            throw EncodingError("token sequence is not an encoding", i);
}
}  // namespace

GraphInstance decode(const TokenWord& tw) {
    check_shape(tw);
    GraphInstance inst{{}, tw[0].count};
    for (std::size_t i = 1; i < tw.size(); i += 2) {
        Vertex p = tw[i].vertex();
        Vertex q = tw[i + 1].vertex();
        inst.graph.add_vertex(p);
        inst.graph.add_vertex(q);
        if (p != q) inst.graph.add_edge(p, q);
    }
    return inst;
}

GraphInstance decode(const Word& w) { return decode(tokenize(w)); }

RedBlueInstance decode_red_blue(const TokenWord& tw) {
    check_shape(tw);
    RedBlueInstance inst{{}, tw[0].count};
    for (std::size_t i = 1; i < tw.size(); i += 2) inst.graph.add_edge(tw[i].vertex(), tw[i + 1].vertex());
    return inst;
}

RedBlueInstance decode_red_blue(const Word& w) { return decode_red_blue(tokenize(w)); }

StateSet run(const Nfa& m, const StateSet& from, const Token& t) {
    StateSet s = step(m, from, Symbol::Start);
    Symbol body = t.kind == TokenKind::Threshold ? Symbol::One : Symbol::A;
    if (t.count <= 64) {
        for (int j = 0; j < static_cast<int>(t.count); ++j) s = step(m, s, body);
    } else {
        s = PowerOrbit(m, s, body).at(t.count);
    }
    return step(m, s, t.kind == TokenKind::LeftVertex ? Symbol::Hash : Symbol::Dollar);
}

bool contains(const Nfa& m, const TokenWord& tw) {
    StateSet s = singleton(m, m.initial());
    for (const auto& t : tw) s = run(m, s, t);
    return intersects_finals(m, s);
}

StateClasses classify_states(const Nfa& m) {
    StateClasses c;
    for (State q = 0; q < m.num_states(); ++q) {
        if (q == m.initial()) {
            if (m.is_final(q)) throw std::logic_error("classify_states: initial state is final");
            c.threshold.push_back(q);
            continue;
        }
        StateSet s = step(m, singleton(m, q), Symbol::Start);
        PowerOrbit orbit(m, s, Symbol::A);
        bool left = false;
        bool right = false;
        for (std::size_t j = 0; j < orbit.preperiod() + orbit.period(); ++j) {
            const StateSet& at = orbit.at(j);
            for (State r = 0; r < m.num_states(); ++r) {
                if (!at[r]) continue;
                for (const auto& t : m.out(r)) {
                    if (t.sym == Symbol::Hash) left = true;
                    if (t.sym == Symbol::Dollar) right = true;
                }
            }
        }
        if (left && right) throw std::logic_error("classify_states: state " + std::to_string(q) + " starts both token kinds");
        if (m.is_final(q)) {
            if (right) throw std::logic_error("classify_states: final state starts right vertex tokens");
            c.left_vertex.push_back(q);
        } else if (left) {
            c.left_vertex.push_back(q);
        } else if (right) {
            c.right_vertex.push_back(q);
        } else {
            c.empty.push_back(q);
        }
    }
    return c;
}

Factorization characteristic_factorization(const Nfa& m, const Word& w) {
    TokenWord tokens = tokenize(w);
    std::size_t n = tokens.size();
    std::vector<StateSet> back(n + 1, StateSet(m.num_states(), false));
    for (State f : m.finals()) back[n][f] = true;
    for (std::size_t i = n; i-- > 0;) {
        for (State q = 0; q < m.num_states(); ++q) {
            StateSet reach = run(m, singleton(m, q), tokens[i]);
            for (State r = 0; r < m.num_states(); ++r)
                if (reach[r] && back[i + 1][r]) {
                    back[i][q] = true;
                    break;
                }
        }
    }
    if (!back[0][m.initial()]) throw AutomatonError("characteristic_factorization: word not accepted");
    Factorization f{tokens, {m.initial()}};
    for (std::size_t i = 0; i < n; ++i) {
        StateSet reach = run(m, singleton(m, f.states.back()), tokens[i]);
        State pick = -1;
        for (State r = 0; r < m.num_states() && pick < 0; ++r)
            if (reach[r] && back[i + 1][r]) pick = r;
        f.states.push_back(pick);
    }
    return f;
}

std::size_t sigma_w(const Factorization& f, const std::vector<std::vector<bool>>& infinite_v) {
    std::map<std::pair<State, State>, std::size_t> hits;
    std::size_t best = 0;
    for (std::size_t i = 1; i < f.factors.size(); ++i) {
        State p = f.states[i];
        State q = f.states[i + 1];
        if (infinite_v[p][q]) best = std::max(best, ++hits[{p, q}]);
    }
    return best;
}

}  // namespace intreg
