#include "tk/canonical.hpp"

#include <optional>

namespace tk {
namespace {

// Each placed vertex splits every remaining cell into its in-neighbours
// followed by its out-neighbours; a row of the arc string is then fixed by
// the per-cell in-degree counts, so only ties need branching.
class CanonSearch {
public:
    CanonSearch(const Tournament& t, int root) : t_(t), n_(t.order()), root_(root) {
        rows_.resize(n_);
        perm_.resize(n_);
    }

    CanonicalLabeling run() {
        std::vector<Mask> cells{t_.vertices()};
        descend(0, cells);
        CanonicalLabeling out;
        out.order = best_perm_;
        for (int k = 0; k < n_; ++k) {
            int len = n_ - 1 - k;
            for (int b = len - 1; b >= 0; --b) out.bits.push_back((best_rows_[k] >> b & 1) ? '1' : '0');
        }
        return out;
    }

private:
    std::uint64_t row_of(int v, const std::vector<Mask>& cells) const {
        std::uint64_t r = 0;
        const Mask in = t_.in(v);
        for (Mask c : cells) {
            c &= ~bit(v);
            int s = popcount(c);
            if (!s) continue;
            int a = popcount(c & in);
            r = (r << s) | ((std::uint64_t{1} << (s - a)) - 1);
        }
        return r;
    }

    // -1 if current prefix plus r is smaller than the best, 0 equal, 1 larger.
    int compare_prefix(int k, std::uint64_t r) const {
        if (!have_best_) return -1;
        for (int i = 0; i < k; ++i)
            if (rows_[i] != best_rows_[i]) return rows_[i] < best_rows_[i] ? -1 : 1;
        if (r != best_rows_[k]) return r < best_rows_[k] ? -1 : 1;
        return 0;
    }

    void descend(int k, const std::vector<Mask>& cells) {
        if (k == n_) {
            bool better = !have_best_;
            if (!better)
                for (int i = 0; i < n_; ++i)
                    if (rows_[i] != best_rows_[i]) {
                        better = rows_[i] < best_rows_[i];
                        break;
                    }
            if (better) {
                best_rows_ = rows_;
                best_perm_ = perm_;
                have_best_ = true;
            }
            return;
        }
        Mask candidates = cells.front();
        if (k == 0 && root_ >= 0) candidates = bit(root_);
        std::optional<std::uint64_t> least;
        for_each_bit(candidates, [&](int v) {
            auto r = row_of(v, cells);
            if (!least || r < *least) least = r;
        });
        if (compare_prefix(k, *least) > 0) return;
        for_each_bit(candidates, [&](int v) {
            if (row_of(v, cells) != *least) return;
            if (compare_prefix(k, *least) > 0) return;
            rows_[k] = *least;
            perm_[k] = v;
            std::vector<Mask> next;
            next.reserve(cells.size() * 2);
            const Mask in = t_.in(v), out = t_.out(v);
            for (Mask c : cells) {
                c &= ~bit(v);
                if (c & in) next.push_back(c & in);
                if (c & out) next.push_back(c & out);
            }
            descend(k + 1, next);
        });
    }

    const Tournament& t_;
    int n_;
    int root_;
    std::vector<std::uint64_t> rows_, best_rows_;
    std::vector<int> perm_, best_perm_;
    bool have_best_ = false;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Tournament& t, int root) { return CanonSearch(t, root).run(); }

std::string canonical_form(const Tournament& t) { return canonical_labeling(t).bits; }

Tournament canonical_tournament(const Tournament& t) {
    auto c = canonical_labeling(t);
    return make_tournament(t.order(), c.bits);
}

bool is_isomorphic(const Tournament& a, const Tournament& b) {
    return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

std::string rooted_canonical_form(const Tournament& t, int root) { return canonical_labeling(t, root).bits; }

}  // namespace tk
