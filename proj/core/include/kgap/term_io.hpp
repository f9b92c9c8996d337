#pragma once

#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kgap/fixed_point.hpp"

namespace kgap {

/// Text syntax, by dilator:
///   multiset   LABEL*(child,child,...)   children in canonical order, repeats
///              written out, e.g. 1*(0*(),0*())
///   oneplus    LABEL*<0> | LABEL*<1+ t>
///   cons       LABEL*<0> | LABEL*<z,t>   z an element of the Z order
std::string format_term(const TermStore& store, TermId t);

/// Parses and interns a term. Throws ParseError (1-based position) on
/// malformed text and Error(label_out_of_range) for labels above the bound.
TermId parse_term(TermStore& store, std::string_view text);

/// {"label", "length", "height", "payload": {"shape", "children": [...]}}
nlohmann::json term_to_json(const TermStore& store, TermId t);

/// Hasse diagram of the term order restricted to the fragment.
std::string hasse_dot(const TermStore& store, std::span<const TermId> fragment);

}  // namespace kgap
