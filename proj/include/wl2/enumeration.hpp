#pragma once

#include "wl2/coxeter.hpp"
#include "wl2/poly.hpp"

#include <cstdint>
#include <mutex>
#include <vector>

namespace wl2 {

using Elem = std::int32_t;
constexpr Elem kNone = -1;

// Breadth-first enumeration of the Cayley graph of W_T, layer by layer.
//
// Each element keeps its right descent set, its neighbours w*s, and for every
// pair {a,b} with finite label the length of the longest suffix lying in
// W_{a,b}. For s not a descent of w, a generator t != s is a descent of ws
// exactly when that suffix for {s,t} has length m_st - 1, which lets a new
// layer be built from the previous one without any word rewriting. Within a
// layer, elements are stored in ShortLex order of their normal forms.
class Enumerator {
public:
    Enumerator(const CoxeterSystem& sys, GenSet gens, std::size_t cap);

    // Ensures every element of length <= L is present. Throws ResourceError
    // when the element budget would be exceeded.
    void extend_to(int L);
    int built_length() const { return built_; }
    bool complete() const { return complete_; }  // W_T finite and fully listed

    std::size_t size() const { return len_.size(); }
    std::size_t layer_begin(int l) const { return layer_start_[l]; }
    std::size_t layer_end(int l) const { return layer_start_[l + 1]; }
    std::vector<std::size_t> layer_sizes() const;

    int length(Elem w) const { return len_[w]; }
    GenSet descents(Elem w) const { return desc_[w]; }
    Elem mul(Elem w, int s);  // right multiplication; extends when needed
    Elem mul_known(Elem w, int s) const { return mul_[w * k_ + local_[s]]; }
    int last_letter(Elem w) const { return last_[w]; }

    Word normal_form(Elem w) const;
    Elem element(const Word& w);
    Elem inverse(Elem w);
    Elem left_mul(int s, Elem w);
    // Minimal representative of w W_T (T inside the generator set).
    Elem min_coset_rep(Elem w, GenSet T) const;
    // Exponent vector over conjugacy classes of the ambient system.
    Exponent class_exponent(Elem w) const;

    GenSet generators() const { return gens_; }
    int ambient_rank() const { return n_; }
    int num_classes() const { return nclasses_; }

    // Element of maximal length (requires complete()).
    Elem longest() const;

private:
    void build_next_layer();
    int tail(Elem w, int pair) const { return tail_[static_cast<std::size_t>(w) * npairs_ + pair]; }
    int pair_index(int la, int lb) const { return pair_[la * k_ + lb]; }

    int n_, k_, nclasses_;
    GenSet gens_;
    std::vector<int> letters_;  // local -> global
    std::vector<int> local_;    // global -> local (or -1)
    std::vector<int> mloc_;     // labels between local letters
    std::vector<int> pair_;     // local pair -> pair id, -1 if infinite
    std::vector<std::pair<int, int>> pairs_;
    int npairs_ = 0;
    std::vector<int> class_of_;
    std::size_t cap_;

    std::vector<std::uint16_t> len_;
    std::vector<GenSet> desc_;
    std::vector<Elem> mul_;
    std::vector<std::uint8_t> tail_;
    std::vector<std::int8_t> last_;
    std::vector<std::size_t> layer_start_;
    int built_ = -1;
    bool complete_ = false;
    mutable std::recursive_mutex mu_;
};

// Normal forms of all elements of length <= L in BFS (ShortLex) order.
std::vector<Word> ball(const CoxeterSystem& sys, int L);

}  // namespace wl2
