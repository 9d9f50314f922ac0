#include "wl2/words.hpp"

#include <algorithm>
#include <deque>

namespace wl2 {

std::set<Word> TitsRewriter::braid_class(const Word& reduced) const {
    std::set<Word> seen{reduced};
    std::deque<Word> queue{reduced};
    while (!queue.empty()) {
        Word w = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            int s = w[i], t = w[i + 1];
            if (s == t) continue;
            int m = sys_.m(s, t);
            if (m == kInfinity || i + m > w.size()) continue;
            bool alternating = true;
            for (int j = 0; j < m && alternating; ++j) alternating = w[i + j] == (j % 2 == 0 ? s : t);
            if (!alternating) continue;
            Word v = w;
            for (int j = 0; j < m; ++j) v[i + j] = j % 2 == 0 ? t : s;
            if (seen.insert(v).second) queue.push_back(std::move(v));
        }
    }
    return seen;
}

Word TitsRewriter::append(const Word& nf, int s) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find({nf, s});
        if (it != memo_.end()) return it->second;
    }
    Word result;
    auto cls = braid_class(nf);
    const Word* ending = nullptr;
    for (auto& w : cls)
        if (!w.empty() && w.back() == s) {
            ending = &w;
            break;
        }
    if (ending) {
        // s is a right descent: the product is shorter by one letter.
        Word shorter(ending->begin(), ending->end() - 1);
        result = *braid_class(shorter).begin();
    } else {
        Word longer = nf;
        longer.push_back(s);
        result = *braid_class(longer).begin();
    }
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(std::make_pair(nf, s), result);
    return result;
}

Word TitsRewriter::normal_form(const Word& w) {
    Word nf;
    for (int s : w) {
        if (s < 0 || s >= sys_.rank()) throw InputError("unknown generator index");
        nf = append(nf, s);
    }
    return nf;
}

bool TitsRewriter::is_reduced(const Word& w) { return normal_form(w).size() == w.size(); }

Word normal_form(const CoxeterSystem& sys, const Word& w) {
    TitsRewriter tr(sys);
    return tr.normal_form(w);
}

Word min_coset_rep(const CoxeterSystem& sys, const Word& w, GenSet T) {
    TitsRewriter tr(sys);
    Word u = tr.normal_form(w);
    for (bool moved = true; moved;) {
        moved = false;
        for (int s : members(T)) {
            Word us = u;
            us.push_back(s);
            Word v = tr.normal_form(us);
            if (v.size() < u.size()) {
                u = v;
                moved = true;
            }
        }
    }
    return u;
}

}  // namespace wl2
