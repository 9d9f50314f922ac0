#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wl2 {

using Fields = std::vector<std::pair<std::string, std::string>>;

// One hypothesis record: a kind plus ordered key/value fields.
struct Evidence {
    std::string kind;
    Fields fields;

    void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const;  // throws InputError
};

struct VanishingCertificate {
    std::string theorem;
    std::string system;  // hash of the system or complex the hypotheses refer to
    Fields parameters;
    std::vector<Evidence> evidence;
    std::string conclusion;

    const std::string& param(const std::string& key) const;  // throws InputError
    std::string to_text() const;
    std::string to_json() const;
};

// Accepts either the text form or its JSON twin.
VanishingCertificate parse_certificate(std::string_view text);

// Canonical conclusion for a theorem id and its parameters.
std::string conclusion_for(const std::string& theorem, const Fields& parameters);

struct Verification {
    bool ok = true;
    std::vector<std::string> problems;
};

// Re-checks every evidence record from the data it carries (exact integer and
// rational arithmetic, root isolation of recorded polynomials) and that the
// records cover the theorem's hypotheses.
Verification verify_certificate(const VanishingCertificate& c);

}  // namespace wl2
