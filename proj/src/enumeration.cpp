#include "wl2/enumeration.hpp"

#include <algorithm>
#include <string>

namespace wl2 {

Enumerator::Enumerator(const CoxeterSystem& sys, GenSet gens, std::size_t cap)
    : n_(sys.rank()), nclasses_(sys.num_classes()), gens_(gens), cap_(cap) {
    letters_ = members(gens);
    k_ = static_cast<int>(letters_.size());
    local_.assign(n_, -1);
    for (int i = 0; i < k_; ++i) local_[letters_[i]] = i;
    mloc_.assign(k_ * k_, 1);
    pair_.assign(k_ * k_, -1);
    for (int a = 0; a < k_; ++a)
        for (int b = 0; b < k_; ++b) {
            if (a == b) continue;
            int m = sys.m(letters_[a], letters_[b]);
            mloc_[a * k_ + b] = m;
            if (m != kInfinity && a < b) {
                if (m > 255) throw InputError("labels above 255 are not supported by the enumerator");
                pair_[a * k_ + b] = pair_[b * k_ + a] = npairs_++;
                pairs_.push_back({a, b});
            }
        }
    for (int s = 0; s < n_; ++s) class_of_.push_back(sys.class_of(s));

    len_.push_back(0);
    desc_.push_back(0);
    mul_.assign(k_, kNone);
    tail_.assign(npairs_, 0);
    last_.push_back(-1);
    layer_start_ = {0, 1};
    built_ = 0;
    if (k_ == 0) {
        layer_start_.push_back(1);
        complete_ = true;
    }
}

std::vector<std::size_t> Enumerator::layer_sizes() const {
    std::vector<std::size_t> out;
    for (int l = 0; l <= built_; ++l) out.push_back(layer_end(l) - layer_begin(l));
    return out;
}

void Enumerator::extend_to(int L) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    while (built_ < L && !complete_) build_next_layer();
}

void Enumerator::build_next_layer() {
    const int n = built_;
    const Elem begin = static_cast<Elem>(layer_start_[n]);
    const Elem end = static_cast<Elem>(layer_start_[n + 1]);
    struct Pending {
        Elem w;
        int s;
        Elem parent;
        int t;
    };
    std::vector<Pending> pending;
    std::vector<Elem> nb(k_);
    std::vector<int> dl;
    dl.reserve(k_);

    for (Elem w = begin; w < end; ++w) {
        for (int ls = 0; ls < k_; ++ls) {
            const int s = letters_[ls];
            if (desc_[w] & bit(s)) continue;
            GenSet D = bit(s);
            dl.clear();
            Elem best_parent = w;
            int best_t = ls;
            for (int lt = 0; lt < k_; ++lt) {
                if (lt == ls) continue;
                int p = pair_index(ls, lt);
                if (p < 0) continue;
                const int m = mloc_[ls * k_ + lt];
                if (tail(w, p) != m - 1) continue;
                D |= bit(letters_[lt]);
                dl.push_back(lt);
                // (ws)t = z * (alternating word of length m-1 ending in s), where z
                // is reached from w by stepping down through t, s, t, ...
                Elem cur = w;
                for (int i = 0; i < m - 1; ++i) cur = mul_[cur * k_ + (i % 2 == 0 ? lt : ls)];
                for (int i = 0; i < m - 1; ++i) cur = mul_[cur * k_ + ((m - 2 - i) % 2 == 0 ? ls : lt)];
                nb[lt] = cur;
                if (cur < best_parent || (cur == best_parent && lt < best_t)) {
                    best_parent = cur;
                    best_t = lt;
                }
            }
            if (best_parent != w || best_t != ls) {
                pending.push_back({w, ls, best_parent, best_t});
                continue;
            }
            if (len_.size() >= cap_) {
                // Roll back the partial layer so the enumerator stays usable.
                len_.resize(end);
                desc_.resize(end);
                last_.resize(end);
                mul_.resize(static_cast<std::size_t>(end) * k_);
                tail_.resize(static_cast<std::size_t>(end) * npairs_);
                for (Elem v = begin; v < end; ++v)
                    for (int j = 0; j < k_; ++j)
                        if (mul_[v * k_ + j] >= end) mul_[v * k_ + j] = kNone;
                throw ResourceError("element cap of " + std::to_string(cap_) + " exceeded while building length " +
                                    std::to_string(n + 1));
            }
            const Elem x = static_cast<Elem>(len_.size());
            len_.push_back(static_cast<std::uint16_t>(n + 1));
            desc_.push_back(D);
            last_.push_back(static_cast<std::int8_t>(s));
            mul_.resize(mul_.size() + k_, kNone);
            mul_[w * k_ + ls] = x;
            mul_[x * k_ + ls] = w;
            for (int lt : dl) mul_[x * k_ + lt] = nb[lt];
            std::size_t base = tail_.size();
            tail_.resize(base + npairs_, 0);
            for (int p = 0; p < npairs_; ++p) {
                auto [a, b] = pairs_[p];
                int v;
                if (a == ls || b == ls)
                    v = tail(w, p) + 1;
                else if (D & bit(letters_[a]))
                    v = tail(nb[a], p) + 1;
                else if (D & bit(letters_[b]))
                    v = tail(nb[b], p) + 1;
                else
                    v = 0;
                tail_[base + p] = static_cast<std::uint8_t>(v);
            }
        }
    }
    for (auto& pd : pending) mul_[pd.w * k_ + pd.s] = mul_[pd.parent * k_ + pd.t];
    layer_start_.push_back(len_.size());
    built_ = n + 1;
    if (layer_start_[n + 2] == layer_start_[n + 1]) complete_ = true;
}

Elem Enumerator::mul(Elem w, int s) {
    if (local_[s] < 0) throw InputError("generator outside the enumerated subgroup");
    Elem r = mul_known(w, s);
    if (r == kNone) {
        extend_to(length(w) + 1);
        r = mul_known(w, s);
    }
    return r;
}

Word Enumerator::normal_form(Elem w) const {
    Word out;
    while (w != 0) {
        int s = last_[w];
        out.push_back(s);
        w = mul_known(w, s);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Elem Enumerator::element(const Word& w) {
    Elem cur = 0;
    for (int s : w) cur = mul(cur, s);
    return cur;
}

Elem Enumerator::inverse(Elem w) {
    Word nf = normal_form(w);
    std::reverse(nf.begin(), nf.end());
    return element(nf);
}

Elem Enumerator::left_mul(int s, Elem w) { return inverse(mul(inverse(w), s)); }

Elem Enumerator::min_coset_rep(Elem w, GenSet T) const {
    while (GenSet d = desc_[w] & T) w = mul_known(w, std::countr_zero(d));
    return w;
}

Exponent Enumerator::class_exponent(Elem w) const {
    Exponent e(nclasses_, 0);
    while (w != 0) {
        int s = last_[w];
        ++e[class_of_[s]];
        w = mul_known(w, s);
    }
    return e;
}

Elem Enumerator::longest() const {
    if (!complete_) throw InputError("longest element requested for an unfinished enumeration");
    return static_cast<Elem>(len_.size() - 1);
}

std::vector<Word> ball(const CoxeterSystem& sys, int L) {
    if (L < 0) throw InputError("ball radius must be non-negative");
    Enumerator& e = sys.enumerator();
    e.extend_to(L);
    int top = std::min(L, e.built_length());
    std::vector<Word> out;
    out.reserve(e.layer_end(top));
    for (std::size_t w = 0; w < e.layer_end(top); ++w) out.push_back(e.normal_form(static_cast<Elem>(w)));
    return out;
}

}  // namespace wl2
