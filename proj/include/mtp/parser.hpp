#pragma once

#include "mtp/expr.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace mtp {

struct ParseOptions {
    /// Name of the variable; inferred from trig arguments or the first bare identifier when unset.
    std::optional<std::string> variable;
    /// Name of the parameter; when unset, a single extra identifier is taken as the parameter.
    std::optional<std::string> parameter;
};

/// Parses
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := int ['/' posint] | var ['^' nat] | ('sin'|'cos') '(' var ')' ['^' nat]
///           | param ['^' nat] | '(' expr ')' ['^' nat]
/// expanding products distributively. Like terms are merged but zero
/// coefficients are kept; call normalize() afterwards. The parameter may only
/// appear affinely. Throws ParseError with a byte offset.
MtpExpr parse_expr(std::string_view text, const ParseOptions& options = {});

}  // namespace mtp
