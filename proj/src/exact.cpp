#include "dichroma/exact.hpp"

#include <algorithm>
#include <numeric>

namespace dichroma {

namespace {

class ExactSolver {
public:
    ExactSolver(const Digraph& d, int k) : d_(d), k_(k), assignment_(d.n(), -1) {
        order_.resize(d.n());
        std::iota(order_.begin(), order_.end(), 0);
        std::vector<int> degree(d.n());
        for (int v = 0; v < d.n(); ++v)
            degree[v] = static_cast<int>(d.out(v).size() + d.in(v).size());
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (degree[a] != degree[b]) return degree[a] > degree[b];
            return a < b;
        });
        classes_.resize(k);
    }

    bool solve() { return place(0); }
    const std::vector<int>& assignment() const { return assignment_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool place(std::size_t idx) {
        if (idx == order_.size()) return true;
        const int v = order_[idx];
        const int limit = std::min(open_classes_ + 1, k_);
        for (int c = 0; c < limit; ++c) {
            ++nodes_;
            if (insert(c, v)) {
                assignment_[v] = c;
                if (place(idx + 1)) return true;
                assignment_[v] = -1;
                erase(c, v);
            }
        }
        return false;
    }

    // Keeps each class as a topological order. Insertion first tries the
    // window between the last in-neighbour and the first out-neighbour; when
    // the window is inverted the class order is rebuilt, which also decides
    // whether v closes a directed cycle.
    bool insert(int c, int v) {
        auto& cls = classes_[c];
        int max_in = -1, min_out = static_cast<int>(cls.size());
        for (int i = 0; i < static_cast<int>(cls.size()); ++i) {
            if (d_.has_arc(cls[i], v)) max_in = std::max(max_in, i);
            if (d_.has_arc(v, cls[i])) min_out = std::min(min_out, i);
        }
        if (max_in < min_out) {
            cls.insert(cls.begin() + max_in + 1, v);
            if (cls.size() == 1) ++open_classes_;
            return true;
        }
        std::vector<int> verts = cls;
        verts.push_back(v);
        std::vector<int> topo;
        if (!local_topo(verts, topo)) return false;
        cls = std::move(topo);
        return true;
    }

    void erase(int c, int v) {
        auto& cls = classes_[c];
        cls.erase(std::find(cls.begin(), cls.end(), v));
        if (cls.empty()) --open_classes_;
    }

    bool local_topo(const std::vector<int>& verts, std::vector<int>& topo) const {
        const int s = static_cast<int>(verts.size());
        std::vector<int> indeg(s, 0);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j)
                if (i != j && d_.has_arc(verts[i], verts[j])) ++indeg[j];
        std::vector<int> ready;
        for (int i = 0; i < s; ++i)
            if (indeg[i] == 0) ready.push_back(i);
        topo.clear();
        while (!ready.empty()) {
            const int i = ready.back();
            ready.pop_back();
            topo.push_back(verts[i]);
            for (int j = 0; j < s; ++j)
                if (i != j && d_.has_arc(verts[i], verts[j]) && --indeg[j] == 0)
                    ready.push_back(j);
        }
        return static_cast<int>(topo.size()) == s;
    }

    const Digraph& d_;
    int k_;
    std::vector<int> order_;
    std::vector<int> assignment_;
    std::vector<std::vector<int>> classes_;
    int open_classes_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<ExactResult> exact_dichromatic(const Digraph& d, int k_max) {
    if (d.n() == 0) return ExactResult{0, Colouring(0), 0};
    std::uint64_t nodes = 0;
    for (int k = 1; k <= k_max; ++k) {
        ExactSolver solver(d, k);
        const bool found = solver.solve();
        nodes += solver.nodes();
        if (found) return ExactResult{k, Colouring(d.n(), solver.assignment()), nodes};
    }
    return std::nullopt;
}

std::optional<ExactResult> exact_dichromatic(const Digraph& d) {
    return exact_dichromatic(d, d.n());
}

int brute_force_dichromatic(const Digraph& d) {
    const int n = d.n();
    if (n > 8) throw ContractViolation("brute-force oracle accepts at most 8 vertices");
    if (n == 0) return 0;

    std::vector<std::uint32_t> in_adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : d.in(v)) in_adj[v] |= 1u << u;

    // A class is acyclic iff repeatedly deleting members without an
    // in-neighbour inside the class empties it.
    const auto class_acyclic = [&](std::uint32_t members) {
        bool progress = true;
        while (members != 0 && progress) {
            progress = false;
            for (int v = 0; v < n; ++v)
                if ((members >> v & 1u) && (in_adj[v] & members) == 0) {
                    members &= ~(1u << v);
                    progress = true;
                }
        }
        return members == 0;
    };

    for (int k = 1; k <= n; ++k) {
        std::vector<int> digits(n, 0);
        while (true) {
            std::vector<std::uint32_t> classes(k, 0);
            for (int v = 0; v < n; ++v) classes[digits[v]] |= 1u << v;
            bool ok = true;
            for (int c = 0; c < k && ok; ++c) ok = class_acyclic(classes[c]);
            if (ok) return k;

            int pos = 0;
            while (pos < n && digits[pos] == k - 1) digits[pos++] = 0;
            if (pos == n) break;
            ++digits[pos];
        }
    }
    return n;  // unreachable: singleton classes are always acyclic
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::vector<std::pair<int, int>> unordered_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

std::uint64_t power(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

Digraph from_digits(int n, const std::vector<std::pair<int, int>>& pairs,
                    const std::vector<int>& digits) {
    std::vector<std::pair<int, int>> arcs;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [u, v] = pairs[i];
        switch (digits[i]) {
            case 0: break;
            case 1: arcs.emplace_back(u, v); break;
            case 2: arcs.emplace_back(v, u); break;
            case 3:
                arcs.emplace_back(u, v);
                arcs.emplace_back(v, u);
                break;
        }
    }
    return Digraph(n, arcs);
}

bool advance(std::vector<int>& digits, int radix) {
    std::size_t pos = 0;
    while (pos < digits.size() && digits[pos] == radix - 1) digits[pos++] = 0;
    if (pos == digits.size()) return false;
    ++digits[pos];
    return true;
}

}  // namespace

OrientedEnumerator::OrientedEnumerator(int n) : n_(n), pairs_(unordered_pairs(n)) {
    if (n < 0 || n > 5)
        throw ContractViolation("oriented enumeration is limited to 5 vertices");
    digits_.assign(pairs_.size(), 0);
}

std::optional<Digraph> OrientedEnumerator::next() {
    if (done_) return std::nullopt;
    Digraph d = from_digits(n_, pairs_, digits_);
    done_ = !advance(digits_, 3);
    return d;
}

void OrientedEnumerator::reset() {
    digits_.assign(pairs_.size(), 0);
    done_ = false;
}

std::uint64_t OrientedEnumerator::total() const { return power(3, pairs_.size()); }

DigraphEnumerator::DigraphEnumerator(int n) : n_(n), pairs_(unordered_pairs(n)) {
    if (n < 0 || n > 4)
        throw ContractViolation("digraph enumeration is limited to 4 vertices");
    digits_.assign(pairs_.size(), 0);
}

std::optional<Digraph> DigraphEnumerator::next() {
    if (done_) return std::nullopt;
    Digraph d = from_digits(n_, pairs_, digits_);
    done_ = !advance(digits_, 4);
    return d;
}

void DigraphEnumerator::reset() {
    digits_.assign(pairs_.size(), 0);
    done_ = false;
}

std::uint64_t DigraphEnumerator::total() const { return power(4, pairs_.size()); }

}  // namespace dichroma
