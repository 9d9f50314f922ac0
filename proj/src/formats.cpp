#include "wl2/formats.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace wl2 {

FileKind detect_kind(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        line = line.substr(b);
        if (line[0] == '{') return FileKind::Certificate;
        if (line.rfind("coxeter v1", 0) == 0) return FileKind::Coxeter;
        if (line.rfind("simp v1", 0) == 0) return FileKind::Simplicial;
        if (line.rfind("cw v1", 0) == 0) return FileKind::CW;
        if (line.rfind("certificate v1", 0) == 0) return FileKind::Certificate;
        throw InputError("unrecognised header '" + line + "'");
    }
    throw InputError("empty input");
}

std::string kind_name(FileKind k) {
    switch (k) {
        case FileKind::Coxeter: return "coxeter v1";
        case FileKind::Simplicial: return "simp v1";
        case FileKind::CW: return "cw v1";
        case FileKind::Certificate: return "certificate v1";
    }
    return "";
}

std::string read_file(const std::string& path) {
    std::ostringstream out;
    if (path == "-") {
        out << std::cin.rdbuf();
        return out.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open " + path);
    out << f.rdbuf();
    return out.str();
}

AnyInput parse_any(std::string_view text) {
    switch (detect_kind(text)) {
        case FileKind::Coxeter: return parse_system(text);
        case FileKind::Simplicial: return parse_simplicial(text);
        case FileKind::CW: return parse_cw(text);
        case FileKind::Certificate: break;
    }
    throw InputError("expected a coxeter, simp or cw file");
}

}  // namespace wl2
