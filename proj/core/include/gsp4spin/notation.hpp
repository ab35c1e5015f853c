#pragma once

#include "gsp4spin/catalog.hpp"
#include "gsp4spin/euler.hpp"

#include <map>
#include <string>
#include <string_view>

namespace gsp4 {

/// Name resolution for the text notation: the declaration context plus
/// declared cuspidal GL(2) representations and abstract characters of K^x.
struct Workspace {
    ContextPtr ctx;
    std::map<std::string, GL2Rep> gl2_reps;
    std::map<std::string, CharacterK> lambda_names;
};

/// Words with fixed meaning in the notation; they cannot be used as
/// generator or representation names.
bool is_reserved_word(const std::string& word);

// Parsers. All throw ParseError (with a byte offset) on malformed input and
// never crash on arbitrary bytes.
Character parse_character(const Workspace& ws, std::string_view text);
GL2Rep parse_gl2(const Workspace& ws, std::string_view text);
GSp4Rep parse_rep(const Workspace& ws, std::string_view text);
CharacterK parse_lambda(const Workspace& ws, std::string_view text);

// Printers: deterministic canonical text, accepted back by the parsers.
// With unicode=true, nu / chi_{K/k} / |x and common greek names render as
// their symbols; the ASCII form is the canonical one.
std::string print_character(const Character& c, bool unicode = false);
std::string print_gl2(const GL2Rep& pi, bool unicode = false);
std::string print_rep(const GSp4Rep& pi, bool unicode = false);
std::string print_lambda(const CharacterK& lambda, bool unicode = false);
std::string print_factor(const EulerFactor& f, bool unicode = false);

} // namespace gsp4
