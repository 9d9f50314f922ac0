#pragma once

#include "wl2/coxeter.hpp"

#include <map>
#include <mutex>
#include <set>

namespace wl2 {

// Word problem by Tits' rewriting: braid moves plus deletion of "ss".
// Results are memoized; the cache is guarded for concurrent callers.
class TitsRewriter {
public:
    explicit TitsRewriter(const CoxeterSystem& sys) : sys_(sys) {}

    Word normal_form(const Word& w);
    bool is_reduced(const Word& w);
    int length(const Word& w) { return static_cast<int>(normal_form(w).size()); }
    // All reduced words of the element represented by a reduced word.
    std::set<Word> braid_class(const Word& reduced) const;

private:
    Word append(const Word& nf, int s);

    const CoxeterSystem& sys_;
    std::mutex mu_;
    std::map<std::pair<Word, int>, Word> memo_;
};

// Convenience entry points using a per-call rewriter.
Word normal_form(const CoxeterSystem& sys, const Word& w);
Word min_coset_rep(const CoxeterSystem& sys, const Word& w, GenSet T);

}  // namespace wl2
