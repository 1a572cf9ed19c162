#pragma once

#include <string>

#include "cointerval/fincat/context.hpp"

namespace cointerval::fincat {

/// Reads a presentation, one declaration per line ('#' starts a comment):
///   obj NAME
///   gen NAME: SRC -> TGT
///   rel W1 = W2          words are ';'-separated generators, left to right,
///                        or id_OBJ (plain `id` when the other side is typed)
/// Throws ParseError carrying the line and column of the offending token.
CatPtr parse_category(const std::string& text, const Limits& limits = {});

/// A presentation plus interval data:
///   interval NAME
///   bottom OBJ / top OBJ        (default: objects named bot and top)
///   star GEN = WORD             WORD in the cocomposable category, whose
///                               generators are GEN.1 (lower) and GEN.2 (upper)
///                               and whose objects are printed by `cointerval`
///   star obj OBJ = OBJ2         optional object images of the star
///   sigma obj OBJ = OBJ2        optional symmetry, given on objects
///   sigma GEN = WORD            and on generators
/// Meet and join are attached when the category is thin enough.
cocat::Interval<FinContext> parse_interval(const std::string& text, const FinContext& ctx);

}  // namespace cointerval::fincat
