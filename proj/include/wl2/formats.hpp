#pragma once

#include "wl2/coxeter.hpp"
#include "wl2/cw.hpp"
#include "wl2/simplicial.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace wl2 {

enum class FileKind { Coxeter, Simplicial, CW, Certificate };

// Decided by the first non-comment line, or by a leading '{' for JSON certificates.
FileKind detect_kind(std::string_view text);
std::string kind_name(FileKind k);

std::string read_file(const std::string& path);  // "-" reads stdin

using AnyInput = std::variant<CoxeterSystem, SimplicialComplex, RegularCWComplex>;
AnyInput parse_any(std::string_view text);

}  // namespace wl2
