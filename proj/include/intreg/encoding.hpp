#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "intreg/automata.hpp"
#include "intreg/graphs.hpp"

namespace intreg {

class EncodingError : public std::runtime_error {
public:
    EncodingError(const std::string& msg, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

enum class TokenKind { Threshold, LeftVertex, RightVertex };

// >1^n$, >a^n# or >a^n$. Threshold counts may exceed any native integer.
struct Token {
    TokenKind kind;
    Nat count;

    Vertex vertex() const;
    Nat length() const { return count + 2; }
    bool operator==(const Token&) const = default;
};

using TokenWord = std::vector<Token>;

Token threshold_token(Nat k);
Token left_token(Vertex i);
Token right_token(Vertex i);

inline constexpr std::size_t kMaxLiteralLength = std::size_t{1} << 22;

// Throws EncodingError when the literal would exceed kMaxLiteralLength.
Word to_word(const Token& t);
Word to_word(const TokenWord& tw);
Nat length(const TokenWord& tw);
// Literal text when short enough, otherwise threshold written as >1^{n}$.
std::string render(const Token& t, std::size_t max_literal = kMaxLiteralLength);
std::string render(const TokenWord& tw, std::size_t max_literal = kMaxLiteralLength);
// Shortlex order on the underlying words.
bool shortlex_less(const TokenWord& a, const TokenWord& b);

// Recognizer of >1*$(>a*#>a*$)*; the initial state has no incoming edges.
const Nfa& enc_nfa();
// Recognizers of >1*$, >a*(#|$), >a*# and >a*$.
const Nfa& threshold_tokens_nfa();
const Nfa& vertex_tokens_nfa();
const Nfa& left_tokens_nfa();
const Nfa& right_tokens_nfa();

// Reads w as a single token of the given shape; nullopt when it is none.
std::optional<Token> as_threshold_token(const Word& w);
std::optional<Token> as_vertex_token(const Word& w);

TokenWord tokenize(const Word& w);
TokenWord parse_compact(const std::string& text);

struct GraphInstance {
    Graph graph;
    Nat k;
    bool operator==(const GraphInstance&) const = default;
    auto operator<=>(const GraphInstance& o) const {
        if (auto c = graph <=> o.graph; c != 0) return c;
        return k < o.k ? std::strong_ordering::less
                       : (k == o.k ? std::strong_ordering::equal : std::strong_ordering::greater);
    }
};

struct RedBlueInstance {
    RedBlueGraph graph;
    Nat k;
    bool operator==(const RedBlueInstance&) const = default;
};

GraphInstance decode(const TokenWord& tw);
GraphInstance decode(const Word& w);
RedBlueInstance decode_red_blue(const TokenWord& tw);
RedBlueInstance decode_red_blue(const Word& w);

// Membership without materializing long threshold tokens.
bool contains(const Nfa& m, const TokenWord& tw);
StateSet run(const Nfa& m, const StateSet& from, const Token& t);

struct StateClasses {
    std::vector<State> threshold;
    std::vector<State> left_vertex;
    std::vector<State> right_vertex;
    std::vector<State> empty;
};

StateClasses classify_states(const Nfa& m);

struct Factorization {
    TokenWord factors;
    std::vector<State> states;  // factors.size() + 1 entries
};

Factorization characteristic_factorization(const Nfa& m, const Word& w);

// infinite_v[p][q] tells whether the vertex-token set of (p, q) is infinite.
std::size_t sigma_w(const Factorization& f, const std::vector<std::vector<bool>>& infinite_v);

}  // namespace intreg
