#include "qchow/hnf.hpp"

#include <algorithm>
#include <map>

#include "qchow/errors.hpp"

namespace qchow {

namespace {

// c -= q * p
void axpy(SparseVec& c, const mpz_class& q, const SparseVec& p) {
    SparseVec out;
    out.reserve(c.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < c.size() || j < p.size()) {
        if (j == p.size() || (i < c.size() && c[i].first < p[j].first)) {
            out.push_back(std::move(c[i++]));
        } else if (i == c.size() || p[j].first < c[i].first) {
            out.emplace_back(p[j].first, -q * p[j].second);
            ++j;
        } else {
            mpz_class v = c[i].second - q * p[j].second;
            if (v != 0) out.emplace_back(c[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    c = std::move(out);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

LatticeSolver::LatticeSolver(int rows, const std::vector<SparseVec>& columns)
    : rows_(rows), cols_(static_cast<int>(columns.size())) {
    std::vector<SparseVec> work(columns.size());
    std::map<int, std::vector<int>> buckets;
    for (int j = 0; j < cols_; ++j) {
        work[j] = columns[j];
        for (const auto& [r, v] : work[j])
            if (r < 0 || r >= rows_) throw IntegrityError("lattice column index out of range");
        work[j].emplace_back(rows_ + j, 1);
        if (work[j].front().first < rows_) buckets[work[j].front().first].push_back(j);
    }

    while (!buckets.empty()) {
        auto node = buckets.extract(buckets.begin());
        const int r = node.key();
        std::vector<int> group = std::move(node.mapped());
        while (group.size() > 1) {
            auto better = [&](int x, int y) {
                int cmp = mpz_cmpabs(work[x].front().second.get_mpz_t(), work[y].front().second.get_mpz_t());
                if (cmp != 0) return cmp < 0;
                if (work[x].size() != work[y].size()) return work[x].size() < work[y].size();
                return x < y;
            };
            int piv = *std::min_element(group.begin(), group.end(), better);
            const mpz_class pl = work[piv].front().second;
            std::vector<int> rest{piv};
            mpz_class q, rem;
            for (int c : group) {
                if (c == piv) continue;
                const mpz_class& cl = work[c].front().second;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), cl.get_mpz_t(), pl.get_mpz_t());
                mpz_class twice = 2 * abs(rem);
                if (twice > abs(pl)) q += sgn(cl) * sgn(pl);
                axpy(work[c], q, work[piv]);
                int lead = work[c].empty() ? rows_ : work[c].front().first;
                if (lead == r)
                    rest.push_back(c);
                else if (lead < rows_)
                    buckets[lead].push_back(c);
            }
            group = std::move(rest);
        }
        SparseVec& col = work[group.front()];
        if (col.front().second < 0)
            for (auto& e : col) e.second = -e.second;
        Pivot pv{r, {}, {}};
        for (auto& e : col) {
            if (e.first < rows_)
                pv.image.push_back(std::move(e));
            else
                pv.transform.emplace_back(e.first - rows_, std::move(e.second));
        }
        col.clear();
        pivots_.push_back(std::move(pv));
    }
}

std::optional<std::vector<mpz_class>> LatticeSolver::solve(const std::vector<mpz_class>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw IntegrityError("right-hand side has the wrong length");
    std::vector<mpz_class> res = b;
    std::vector<mpz_class> x(static_cast<std::size_t>(cols_));
    std::size_t k = 0;
    mpz_class y;
    for (int r = 0; r < rows_; ++r) {
        bool has_pivot = k < pivots_.size() && pivots_[k].row == r;
        if (res[r] == 0) {
            if (has_pivot) ++k;
            continue;
        }
        if (!has_pivot) return std::nullopt;
        const Pivot& pv = pivots_[k++];
        const mpz_class& lead = pv.image.front().second;
        if (!mpz_divisible_p(res[r].get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        mpz_divexact(y.get_mpz_t(), res[r].get_mpz_t(), lead.get_mpz_t());
        for (const auto& [i, v] : pv.image) res[i] -= y * v;
        for (const auto& [j, v] : pv.transform) x[j] += y * v;
    }
    return x;
}

std::optional<std::vector<mpz_class>> hnf_solve(const std::vector<std::vector<mpz_class>>& A,
                                                const std::vector<mpz_class>& b) {
    const int m = static_cast<int>(A.size());
    const std::size_t n = m ? A.front().size() : 0;
    std::vector<SparseVec> cols(n);
    for (int i = 0; i < m; ++i) {
        if (A[i].size() != n) throw IntegrityError("ragged matrix");
        for (std::size_t j = 0; j < n; ++j)
            if (A[i][j] != 0) cols[j].emplace_back(i, A[i][j]);
    }
    return LatticeSolver(m, cols).solve(b);
}

bool in_span_mod_prime(int rows, const std::vector<SparseVec>& columns, const std::vector<mpz_class>& b,
                       std::uint64_t p) {
    const std::size_t n = columns.size();
    std::vector<std::vector<std::uint64_t>> M(static_cast<std::size_t>(rows), std::vector<std::uint64_t>(n + 1, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [i, v] : columns[j]) M[i][j] = mpz_fdiv_ui(v.get_mpz_t(), p);
    for (int i = 0; i < rows; ++i) M[i][n] = mpz_fdiv_ui(b[i].get_mpz_t(), p);

    std::size_t prow = 0;
    for (std::size_t c = 0; c < n && prow < M.size(); ++c) {
        std::size_t r = prow;
        while (r < M.size() && M[r][c] == 0) ++r;
        if (r == M.size()) continue;
        std::swap(M[r], M[prow]);
        std::uint64_t inv = invmod(M[prow][c], p);
        for (std::size_t k = c; k <= n; ++k) M[prow][k] = mulmod(M[prow][k], inv, p);
        for (std::size_t i = prow + 1; i < M.size(); ++i) {
            std::uint64_t f = M[i][c];
            if (!f) continue;
            for (std::size_t k = c; k <= n; ++k) M[i][k] = (M[i][k] + p - mulmod(f, M[prow][k], p)) % p;
        }
        ++prow;
    }
    for (std::size_t i = prow; i < M.size(); ++i)
        if (M[i][n] != 0) return false;
    return true;
}

}  // namespace qchow
