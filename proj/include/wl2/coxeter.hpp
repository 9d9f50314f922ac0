#pragma once

#include "wl2/rational.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace wl2 {

using GenSet = std::uint64_t;  // bit s set <=> generator s present
using Word = std::vector<int>;

constexpr int kInfinity = 0;  // label value standing for m = infinity
constexpr int kMaxGenerators = 64;

inline int popcount(GenSet s) { return std::popcount(s); }
inline GenSet bit(int s) { return GenSet{1} << s; }
std::vector<int> members(GenSet s);

class Enumerator;

class CoxeterSystem {
public:
    // labels[s][t] for s != t: 0 (infinity) or >= 2. Diagonal ignored.
    CoxeterSystem(std::vector<std::string> names, const std::vector<std::vector<int>>& labels);

    int rank() const { return static_cast<int>(names_.size()); }
    GenSet all() const { return rank() == 64 ? ~GenSet{0} : bit(rank()) - 1; }
    const std::string& name(int s) const { return names_[s]; }
    const std::vector<std::string>& names() const { return names_; }
    int index(std::string_view name) const;  // throws InputError
    int m(int s, int t) const { return s == t ? 1 : m_[s * rank() + t]; }
    bool right_angled() const;

    int num_classes() const { return static_cast<int>(class_rep_.size()); }
    int class_of(int s) const { return class_of_[s]; }
    int class_rep(int c) const { return class_rep_[c]; }
    std::vector<std::string> class_names() const;

    bool is_finite(GenSet T) const;
    // Irreducible components named by type, e.g. "A1 x I2(5)"; "infinite" if not finite.
    std::string finite_type(GenSet T) const;
    std::vector<GenSet> components(GenSet T) const;

    // Spherical subsets ordered by cardinality, then by bitmask.
    const std::vector<GenSet>& spherical() const { return spherical_; }
    bool is_spherical(GenSet T) const;
    int spherical_dimension() const;  // max |T| - 1
    std::vector<GenSet> maximal_spherical() const;

    GenSet parse_set(std::string_view comma_list) const;
    std::string set_str(GenSet T) const;  // "{s,t}"
    Word parse_word(std::string_view text) const;
    std::string word_str(const Word& w) const;

    std::string to_text() const;  // coxeter v1
    std::string hash() const;     // FNV-1a of to_text()

    // Induced system on T; generator order follows this system.
    CoxeterSystem restrict(GenSet T) const;

    // Cayley-graph enumerator of W_T (T defaults to all of S), built lazily.
    Enumerator& enumerator(GenSet T) const;
    Enumerator& enumerator() const { return enumerator(all()); }

private:
    std::vector<std::string> names_;
    std::vector<int> m_;
    std::vector<int> class_of_, class_rep_;
    std::vector<GenSet> spherical_;

    struct Cache {
        std::mutex mu;
        std::map<GenSet, std::unique_ptr<Enumerator>> enums;
    };
    std::shared_ptr<Cache> cache_;
};

CoxeterSystem parse_system(std::string_view text);

// Element budget for enumerations; WL2_MAX_ELEMENTS overrides the default 10^6.
std::size_t element_cap();

}  // namespace wl2
