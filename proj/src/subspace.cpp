#include "liecrown/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liecrown {

Subspace Subspace::zero(u32 n) {
    Subspace s;
    s.n = n;
    s.basis = Mat(0, n);
    return s;
}

Subspace Subspace::full(u32 n) {
    Subspace s;
    s.n = n;
    s.basis = Mat::identity(n);
    s.pivots_.resize(n);
    for (u32 i = 0; i < n; ++i) s.pivots_[i] = i;
    return s;
}

Subspace Subspace::span(const PrimeField& F, const Mat& rows, u32 n) {
    if (rows.cols != n) throw std::invalid_argument("Subspace::span: ambient mismatch");
    RrefResult rr = rref(F, rows);
    Subspace s;
    s.n = n;
    s.basis = std::move(rr.m);
    s.pivots_ = std::move(rr.pivots);
    return s;
}

Subspace Subspace::span_vectors(const PrimeField& F, const std::vector<Vec>& vs, u32 n) {
    return span(F, Mat::from_rows(vs, n), n);
}

Subspace Subspace::from_rref(Mat m, u32 n) {
    Subspace s;
    s.n = n;
    s.pivots_.reserve(m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) {
        std::size_t c = 0;
        while (c < m.cols && m.at(r, c) == 0) ++c;
        if (c == m.cols || m.at(r, c) != 1 || (r > 0 && c <= s.pivots_[r - 1]))
            throw std::invalid_argument("Subspace::from_rref: not RREF");
        s.pivots_.push_back(c);
    }
    s.basis = std::move(m);
    return s;
}

Vec Subspace::reduce(const PrimeField& F, Vec v) const {
    for (std::size_t r = 0; r < basis.rows; ++r) {
        u32 c = v[pivots_[r]];
        if (c) row_axpy(F, v.data(), basis.row(r), F.neg(c), n);
    }
    return v;
}

bool Subspace::contains(const PrimeField& F, const Vec& v) const {
    return is_zero(reduce(F, v));
}

bool Subspace::contains(const PrimeField& F, const Subspace& o) const {
    if (o.dim() > dim()) return false;
    for (std::size_t r = 0; r < o.basis.rows; ++r)
        if (!contains(F, o.basis.row_vec(r))) return false;
    return true;
}

bool Subspace::proper_subspace_of(const PrimeField& F, const Subspace& o) const {
    return dim() < o.dim() && o.contains(F, *this);
}

Vec Subspace::coords(const Vec& v) const {
    Vec c(basis.rows, 0);
    for (std::size_t r = 0; r < basis.rows; ++r) c[r] = v[pivots_[r]];
    return c;
}

std::size_t Subspace::hash() const {
    std::size_t h = 1469598103934665603ull ^ n ^ (basis.rows << 16);
    for (u32 x : basis.a) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

Subspace sum(const PrimeField& F, const Subspace& u, const Subspace& v) {
    if (u.n != v.n) throw std::invalid_argument("subspace sum: ambient mismatch");
    Mat stacked(u.basis.rows + v.basis.rows, u.n);
    std::copy(u.basis.a.begin(), u.basis.a.end(), stacked.a.begin());
    std::copy(v.basis.a.begin(), v.basis.a.end(), stacked.a.begin() + u.basis.a.size());
    return Subspace::span(F, stacked, u.n);
}

Subspace intersect(const PrimeField& F, const Subspace& u, const Subspace& v) {
    if (u.n != v.n) throw std::invalid_argument("subspace intersect: ambient mismatch");
    // Zassenhaus: reduce rows [u|u] and [v|0]; rows with zero left half carry
    // intersection generators in the right half.
    const u32 n = u.n;
    Mat z(u.basis.rows + v.basis.rows, 2 * n);
    for (std::size_t r = 0; r < u.basis.rows; ++r)
        for (u32 c = 0; c < n; ++c) {
            z.at(r, c) = u.basis.at(r, c);
            z.at(r, n + c) = u.basis.at(r, c);
        }
    for (std::size_t r = 0; r < v.basis.rows; ++r)
        for (u32 c = 0; c < n; ++c) z.at(u.basis.rows + r, c) = v.basis.at(r, c);
    RrefResult rr = rref(F, z);
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < rr.rank; ++r)
        if (rr.pivots[r] >= n)
            gens.emplace_back(rr.m.row(r) + n, rr.m.row(r) + 2 * n);
    return Subspace::span_vectors(F, gens, n);
}

u64 gaussian_binomial(u32 n, u32 k, u32 p) {
    if (k > n) return 0;
    // [n,k]_p = prod_{i=0}^{k-1} (p^{n-i} - 1) / (p^{i+1} - 1), computed
    // incrementally with saturation via long double guard.
    long double approx = 1.0L;
    for (u32 i = 0; i < k; ++i)
        approx *= (powl((long double)p, (long double)(n - i)) - 1) /
                  (powl((long double)p, (long double)(i + 1)) - 1);
    if (approx > 1.8e19L) return UINT64_MAX;
    // exact integer recomputation (q-Pascal recurrence), safe now
    std::vector<std::vector<u64>> g(n + 1, std::vector<u64>(k + 1, 0));
    for (u32 i = 0; i <= n; ++i) {
        g[i][0] = 1;
        for (u32 j = 1; j <= k && j <= i; ++j) {
            // [i,j] = [i-1,j-1] + p^j * [i-1,j]
            u64 pj = 1;
            bool over = false;
            for (u32 t = 0; t < j; ++t) {
                if (pj > UINT64_MAX / p) { over = true; break; }
                pj *= p;
            }
            u64 a = g[i - 1][j - 1], b = (j <= i - 1) ? g[i - 1][j] : 0;
            if (over || (b && pj > (UINT64_MAX - a) / b)) return UINT64_MAX;
            g[i][j] = a + pj * b;
        }
    }
    return g[n][k];
}

u64 galois_number(u32 n, u32 p) {
    u64 total = 0;
    for (u32 k = 0; k <= n; ++k) {
        u64 c = gaussian_binomial(n, k, p);
        if (c == UINT64_MAX || total > UINT64_MAX - c) return UINT64_MAX;
        total += c;
    }
    return total;
}

// --- enumeration ---

// Generator for one pivot-column combination: odometer over free entries in
// flattened (row, col) position order, least-significant entry last, so each
// combination streams its matrices in lexicographic order.
struct SubspaceEnumerator::Gen {
    Mat current;                                   // k × n RREF matrix
    std::vector<std::pair<u32, u32>> free_pos;     // (row, col), ascending
    bool exhausted = false;

    void init(const std::vector<u32>& pivots, u32 n) {
        const u32 k = static_cast<u32>(pivots.size());
        current = Mat(k, n);
        std::vector<bool> is_piv(n, false);
        for (u32 c : pivots) is_piv[c] = true;
        for (u32 r = 0; r < k; ++r) {
            current.at(r, pivots[r]) = 1;
            for (u32 c = pivots[r] + 1; c < n; ++c)
                if (!is_piv[c]) free_pos.emplace_back(r, c);
        }
        std::sort(free_pos.begin(), free_pos.end());
    }

    bool advance(u32 p) {
        for (std::size_t i = free_pos.size(); i-- > 0;) {
            auto [r, c] = free_pos[i];
            u32 v = current.at(r, c) + 1;
            if (v < p) {
                current.at(r, c) = v;
                return true;
            }
            current.at(r, c) = 0;
        }
        exhausted = true;
        return false;
    }
};

SubspaceEnumerator::~SubspaceEnumerator() = default;

bool SubspaceEnumerator::heap_less(std::size_t a, std::size_t b) const {
    const Vec& x = gens_[a].current.a;
    const Vec& y = gens_[b].current.a;
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

void SubspaceEnumerator::heap_sift() {
    // simple make-heap-free approach: keep heap_ as a sorted-on-demand vector
    std::sort(heap_.begin(), heap_.end(),
              [this](std::size_t a, std::size_t b) { return heap_less(a, b); });
}

SubspaceEnumerator::SubspaceEnumerator(const PrimeField& F, u32 ambient,
                                       std::optional<u32> dim_filter, u64 budget_limit,
                                       bool charge_entry_cost)
    : F_(F), n_(ambient), filter_(dim_filter) {
    u64 cost = 0;
    const u32 lo = filter_ ? *filter_ : 0, hi = filter_ ? *filter_ : ambient;
    for (u32 k = lo; k <= hi && k <= ambient; ++k) {
        u64 cnt = gaussian_binomial(ambient, k, F.p());
        u64 per = charge_entry_cost ? std::max<u64>(1, u64(k) * ambient) : 1;
        if (cnt == UINT64_MAX || (per && cnt > UINT64_MAX / per)) {
            cost = UINT64_MAX;
        } else if (cost != UINT64_MAX) {
            u64 add = cnt * per;
            cost = cost > UINT64_MAX - add ? UINT64_MAX : cost + add;
        }
        total_count_ = (total_count_ == UINT64_MAX || cnt == UINT64_MAX ||
                        total_count_ > UINT64_MAX - cnt)
                           ? UINT64_MAX
                           : total_count_ + cnt;
    }
    if (filter_ && *filter_ > ambient) total_count_ = 0;
    if (cost > budget_limit)
        throw BudgetError("subspace enumeration budget exceeded", cost, budget_limit);
    current_dim_ = lo;
    if (filter_ && *filter_ > ambient)
        dims_done_ = true;
    else
        open_dim(current_dim_);
}

void SubspaceEnumerator::open_dim(u32 k) {
    gens_.clear();
    heap_.clear();
    // all k-subsets of columns as pivot sets
    std::vector<u32> combo(k);
    for (u32 i = 0; i < k; ++i) combo[i] = i;
    auto emit = [&]() {
        Gen g;
        g.init(combo, n_);
        gens_.push_back(std::move(g));
    };
    if (k == 0) {
        emit();  // the zero subspace (empty matrix)
    } else if (k <= n_) {
        while (true) {
            emit();
            // next combination in lex order
            int i = int(k) - 1;
            while (i >= 0 && combo[i] == n_ - k + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (u32 j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    heap_.resize(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) heap_[i] = i;
    heap_sift();
}

std::optional<Subspace> SubspaceEnumerator::next() {
    while (!dims_done_) {
        if (!heap_.empty()) {
            std::size_t g = heap_.front();
            Subspace out = Subspace::from_rref(gens_[g].current, n_);
            if (!gens_[g].advance(F_.p()))
                heap_.erase(heap_.begin());
            else {
                // re-position g in the sorted vector
                std::size_t i = 0;
                while (i + 1 < heap_.size() && heap_less(heap_[i + 1], g)) {
                    heap_[i] = heap_[i + 1];
                    ++i;
                }
                heap_[i] = g;
            }
            return out;
        }
        if (filter_ || current_dim_ == n_) {
            dims_done_ = true;
            break;
        }
        open_dim(++current_dim_);
    }
    return std::nullopt;
}

}  // namespace liecrown
