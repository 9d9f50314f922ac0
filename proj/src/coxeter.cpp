#include "wl2/coxeter.hpp"

#include "wl2/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace wl2 {

std::vector<int> members(GenSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

std::size_t element_cap() {
    if (const char* env = std::getenv("WL2_MAX_ELEMENTS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

CoxeterSystem::CoxeterSystem(std::vector<std::string> names, const std::vector<std::vector<int>>& labels)
    : names_(std::move(names)), cache_(std::make_shared<Cache>()) {
    const int n = rank();
    if (n > kMaxGenerators) throw InputError("at most 64 generators are supported");
    std::set<std::string> seen;
    for (auto& nm : names_)
        if (!seen.insert(nm).second) throw InputError("duplicate generator name: " + nm);
    m_.assign(n * n, 1);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (s == t) continue;
            int v = labels[s][t];
            if (v != labels[t][s]) throw InputError("asymmetric label for " + names_[s] + "," + names_[t]);
            if (v == 1) throw InputError("label 1 off the diagonal for " + names_[s] + "," + names_[t]);
            if (v < 0) throw InputError("negative label for " + names_[s] + "," + names_[t]);
            m_[s * n + t] = v;
        }

    // Classes: components of the odd-label graph.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (m(s, t) != kInfinity && m(s, t) % 2 == 1) parent[find(s)] = find(t);
    class_of_.assign(n, -1);
    for (int s = 0; s < n; ++s) {
        int root = find(s);
        if (class_of_[root] < 0) {
            class_of_[root] = static_cast<int>(class_rep_.size());
            class_rep_.push_back(s);
        }
        class_of_[s] = class_of_[root];
    }

    // Spherical subsets grow one generator at a time above the current maximum.
    spherical_.push_back(0);
    for (std::size_t i = 0; i < spherical_.size(); ++i) {
        GenSet T = spherical_[i];
        int start = T ? 64 - std::countl_zero(T) : 0;
        for (int s = start; s < n; ++s)
            if (is_finite(T | bit(s))) spherical_.push_back(T | bit(s));
    }
    std::sort(spherical_.begin(), spherical_.end(), [](GenSet a, GenSet b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    });
}

int CoxeterSystem::index(std::string_view name) const {
    for (int s = 0; s < rank(); ++s)
        if (names_[s] == name) return s;
    throw InputError("unknown generator: " + std::string(name));
}

bool CoxeterSystem::right_angled() const {
    for (int s = 0; s < rank(); ++s)
        for (int t = s + 1; t < rank(); ++t)
            if (m(s, t) != 2 && m(s, t) != kInfinity) return false;
    return true;
}

std::vector<std::string> CoxeterSystem::class_names() const {
    std::vector<std::string> out;
    for (int r : class_rep_) out.push_back(names_[r]);
    return out;
}

std::vector<GenSet> CoxeterSystem::components(GenSet T) const {
    std::vector<GenSet> out;
    GenSet left = T;
    while (left) {
        GenSet comp = left & (~left + 1), frontier = comp;
        while (frontier) {
            int s = std::countr_zero(frontier);
            frontier &= frontier - 1;
            for (int t : members(left & ~comp))
                if (m(s, t) != 2) {
                    comp |= bit(t);
                    frontier |= bit(t);
                }
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

namespace {

// Type of a connected diagram, or "" when infinite.
std::string classify_component(const CoxeterSystem& sys, GenSet C) {
    auto v = members(C);
    const int n = static_cast<int>(v.size());
    if (n == 1) return "A1";
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    int edges = 0, big = 0, big_label = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int l = sys.m(v[i], v[j]);
            if (l == 2) continue;
            if (l == kInfinity) return "";
            adj[i].push_back({j, l});
            adj[j].push_back({i, l});
            ++edges;
            if (l >= 4) {
                ++big;
                big_label = l;
            }
        }
    if (edges != n - 1) return "";  // diagrams with a cycle are never finite
    if (n == 2) {
        int l = sys.m(v[0], v[1]);
        if (l == 3) return "A2";
        if (l == 4) return "B2";
        if (l == 6) return "G2";
        return "I2(" + std::to_string(l) + ")";
    }
    if (big > 1) return "";
    std::vector<int> deg(n);
    int branch = -1, branches = 0;
    for (int i = 0; i < n; ++i) {
        deg[i] = static_cast<int>(adj[i].size());
        if (deg[i] > 3) return "";
        if (deg[i] == 3) {
            branch = i;
            ++branches;
        }
    }
    if (branches > 1) return "";
    if (branches == 1) {
        if (big) return "";
        std::vector<int> legs;
        for (auto [nb, l] : adj[branch]) {
            int len = 1, prev = branch, cur = nb;
            while (deg[cur] == 2) {
                int nxt = adj[cur][0].first == prev ? adj[cur][1].first : adj[cur][0].first;
                prev = cur;
                cur = nxt;
                ++len;
            }
            legs.push_back(len);
        }
        std::sort(legs.begin(), legs.end());
        if (legs[0] == 1 && legs[1] == 1) return "D" + std::to_string(n);
        if (legs[0] == 1 && legs[1] == 2 && legs[2] <= 4) return "E" + std::to_string(n);
        return "";
    }
    // A path: locate the position of the heavy edge, if any.
    if (!big) return "A" + std::to_string(n);
    int end = 0;
    while (deg[end] != 1) ++end;
    std::vector<int> labels;
    for (int prev = -1, cur = end;;) {
        int nxt = -1, lab = 0;
        for (auto [nb, l] : adj[cur])
            if (nb != prev) {
                nxt = nb;
                lab = l;
            }
        if (nxt < 0) break;
        labels.push_back(lab);
        prev = cur;
        cur = nxt;
    }
    bool at_end = labels.front() >= 4 || labels.back() >= 4;
    if (big_label == 4) {
        if (at_end) return "B" + std::to_string(n);
        if (n == 4) return "F4";
        return "";
    }
    if (big_label == 5 && at_end && n <= 4) return "H" + std::to_string(n);
    return "";
}

}  // namespace

bool CoxeterSystem::is_finite(GenSet T) const {
    for (GenSet c : components(T))
        if (classify_component(*this, c).empty()) return false;
    return true;
}

std::string CoxeterSystem::finite_type(GenSet T) const {
    if (!T) return "trivial";
    std::string out;
    for (GenSet c : components(T)) {
        std::string t = classify_component(*this, c);
        if (t.empty()) return "infinite";
        if (!out.empty()) out += " x ";
        out += t;
    }
    return out;
}

bool CoxeterSystem::is_spherical(GenSet T) const {
    return std::binary_search(spherical_.begin(), spherical_.end(), T, [](GenSet a, GenSet b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    });
}

int CoxeterSystem::spherical_dimension() const { return popcount(spherical_.back()) - 1; }

std::vector<GenSet> CoxeterSystem::maximal_spherical() const {
    std::vector<GenSet> out;
    for (GenSet T : spherical_) {
        bool maximal = true;
        for (int s = 0; s < rank() && maximal; ++s)
            if (!(T & bit(s)) && is_spherical(T | bit(s))) maximal = false;
        if (maximal && T) out.push_back(T);
    }
    return out;
}

GenSet CoxeterSystem::parse_set(std::string_view list) const {
    GenSet T = 0;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) T |= bit(index(cur));
        cur.clear();
    };
    for (char c : list) {
        if (c == ',' || c == ' ' || c == '{' || c == '}')
            flush();
        else
            cur += c;
    }
    flush();
    return T;
}

std::string CoxeterSystem::set_str(GenSet T) const {
    std::string out = "{";
    bool first = true;
    for (int s : members(T)) {
        if (!first) out += ",";
        out += names_[s];
        first = false;
    }
    return out + "}";
}

static bool single_char_names(const std::vector<std::string>& names) {
    return std::all_of(names.begin(), names.end(), [](auto& n) { return n.size() == 1; });
}

Word CoxeterSystem::parse_word(std::string_view text) const {
    Word w;
    bool spaced = text.find(' ') != std::string_view::npos || !single_char_names(names_);
    if (!spaced) {
        for (char c : text) w.push_back(index(std::string(1, c)));
        return w;
    }
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) w.push_back(index(tok));
    return w;
}

std::string CoxeterSystem::word_str(const Word& w) const {
    std::string out;
    bool compact = single_char_names(names_);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i) out += " ";
        out += names_[w[i]];
    }
    return out;
}

std::string CoxeterSystem::to_text() const {
    std::string out = "coxeter v1\ngenerators:";
    for (auto& n : names_) out += " " + n;
    out += "\n";
    for (int s = 0; s < rank(); ++s)
        for (int t = s + 1; t < rank(); ++t)
            if (m(s, t) != kInfinity) out += "m: " + names_[s] + " " + names_[t] + " " + std::to_string(m(s, t)) + "\n";
    return out;
}

std::string CoxeterSystem::hash() const { return fnv1a_hex(to_text()); }

CoxeterSystem CoxeterSystem::restrict(GenSet T) const {
    auto idx = members(T);
    std::vector<std::string> nm;
    std::vector<std::vector<int>> lab(idx.size(), std::vector<int>(idx.size(), 1));
    for (std::size_t i = 0; i < idx.size(); ++i) {
        nm.push_back(names_[idx[i]]);
        for (std::size_t j = 0; j < idx.size(); ++j)
            if (i != j) lab[i][j] = m(idx[i], idx[j]);
    }
    return CoxeterSystem(std::move(nm), lab);
}

Enumerator& CoxeterSystem::enumerator(GenSet T) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& slot = cache_->enums[T];
    if (!slot) slot = std::make_unique<Enumerator>(*this, T, element_cap());
    return *slot;
}

CoxeterSystem parse_system(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool header = false;
    std::vector<std::string> names;
    std::vector<std::tuple<std::string, std::string, int>> entries;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (!header) {
            std::string ver;
            ls >> ver;
            if (key != "coxeter" || ver != "v1") throw InputError("expected header 'coxeter v1'");
            header = true;
            continue;
        }
        if (key == "generators:") {
            if (!names.empty()) throw InputError("generators listed twice");
            std::string g;
            while (ls >> g) names.push_back(g);
            if (names.empty()) throw InputError("no generators");
        } else if (key == "m:") {
            std::string a, b, l;
            if (!(ls >> a >> b >> l)) throw InputError("line " + std::to_string(lineno) + ": malformed m: entry");
            int v;
            if (l == "inf" || l == "infinity")
                v = kInfinity;
            else {
                try {
                    std::size_t pos = 0;
                    v = std::stoi(l, &pos);
                    if (pos != l.size()) throw InputError("");
                } catch (...) {
                    throw InputError("line " + std::to_string(lineno) + ": bad label '" + l + "'");
                }
                if (v <= 0) throw InputError("line " + std::to_string(lineno) + ": label must be >= 2 or inf");
                if (v == 1) throw InputError("line " + std::to_string(lineno) + ": label 1 off the diagonal");
            }
            entries.emplace_back(a, b, v);
        } else {
            throw InputError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!header) throw InputError("empty coxeter file");
    if (names.empty()) throw InputError("missing generators line");
    std::set<std::string> uniq(names.begin(), names.end());
    if (uniq.size() != names.size()) throw InputError("duplicate generator names");
    const int n = static_cast<int>(names.size());
    std::vector<std::vector<int>> lab(n, std::vector<int>(n, kInfinity));
    std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
    auto find = [&](const std::string& g) {
        auto it = std::find(names.begin(), names.end(), g);
        if (it == names.end()) throw InputError("unknown generator: " + g);
        return static_cast<int>(it - names.begin());
    };
    for (auto& [a, b, v] : entries) {
        int s = find(a), t = find(b);
        if (s == t) throw InputError("diagonal entry for " + a);
        if (given[s][t] && lab[s][t] != v) throw InputError("asymmetric labels for " + a + "," + b);
        given[s][t] = given[t][s] = true;
        lab[s][t] = lab[t][s] = v;
    }
    return CoxeterSystem(std::move(names), lab);
}

}  // namespace wl2
