#include "nonef/matrix.hpp"

#include <algorithm>
#include <cstdlib>

#include "nonef/kernels.hpp"
#include "nonef/modarith.hpp"

namespace nonef {

ThreadPool::ThreadPool(unsigned threads) : nthreads_(threads == 0 ? 1 : threads) {
    for (unsigned t = 1; t < nthreads_; ++t) workers_.emplace_back([this, t] { worker(t); });
}

ThreadPool::~ThreadPool() {
    {
        std::lock_guard<std::mutex> lk(mu_);
        stop_ = true;
    }
    cv_work_.notify_all();
    for (auto& w : workers_) w.join();
}

void ThreadPool::worker(unsigned self) {
    std::uint64_t seen = 0;
    for (;;) {
        const std::function<void(std::size_t, std::size_t)>* job;
        std::size_t b, e;
        {
            std::unique_lock<std::mutex> lk(mu_);
            cv_work_.wait(lk, [&] { return stop_ || generation_ != seen; });
            if (stop_) return;
            seen = generation_;
            job = job_;
            b = job_begin_;
            e = job_end_;
        }
        std::size_t total = e - b;
        std::size_t chunk = (total + nthreads_ - 1) / nthreads_;
        std::size_t cb = b + std::min<std::size_t>(total, self * chunk);
        std::size_t ce = b + std::min<std::size_t>(total, (self + 1) * chunk);
        if (cb < ce) (*job)(cb, ce);
        {
            std::lock_guard<std::mutex> lk(mu_);
            if (--pending_ == 0) cv_done_.notify_all();
        }
    }
}

void ThreadPool::parallel_for(std::size_t begin, std::size_t end,
                              const std::function<void(std::size_t, std::size_t)>& chunk) {
    if (begin >= end) return;
    std::size_t total = end - begin;
    if (nthreads_ == 1 || total < 2) {
        chunk(begin, end);
        return;
    }
    {
        std::lock_guard<std::mutex> lk(mu_);
        job_ = &chunk;
        job_begin_ = begin;
        job_end_ = end;
        pending_ = nthreads_ - 1;
        ++generation_;
    }
    cv_work_.notify_all();
    // This thread takes chunk 0.
    std::size_t per = (total + nthreads_ - 1) / nthreads_;
    chunk(begin, begin + std::min(total, per));
    std::unique_lock<std::mutex> lk(mu_);
    cv_done_.wait(lk, [&] { return pending_ == 0; });
}

ThreadPool& ThreadPool::shared() {
    static ThreadPool pool([] {
        if (const char* env = std::getenv("NONEF_THREADS")) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 1 && v <= 64) return static_cast<unsigned>(v);
        }
        unsigned hw = std::thread::hardware_concurrency();
        return std::min(hw == 0 ? 1u : hw, 8u);
    }());
    return pool;
}

std::size_t rank_destructive(Matrix& m, u64 p, ThreadPool* pool) {
    if (pool == nullptr) pool = &ThreadPool::shared();
    auto submul = kern::row_submul();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        // First row at or below `rank` with a nonzero entry in this column.
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank) std::swap_ranges(m.row(piv), m.row(piv) + m.cols, m.row(rank));
        u64 pivinv = fp::inv_mod(m.at(rank, col), p);
        const u64* prow = m.row(rank);
        std::size_t width = m.cols - col;
        pool->parallel_for(rank + 1, m.rows, [&, col, width, pivinv](std::size_t b, std::size_t e) {
            for (std::size_t r = b; r < e; ++r) {
                u64 lead = m.at(r, col);
                if (lead == 0) continue;
                u64 f = fp::mul_mod(lead, pivinv, p);
                u64 fs = fp::shoup_precompute(f, p);
                submul(m.row(r) + col, prow + col, width, f, fs, p);
            }
        });
        ++rank;
    }
    return rank;
}

std::size_t rank_of(Matrix m, u64 p, ThreadPool* pool) {
    return rank_destructive(m, p, pool);
}

std::vector<std::vector<u64>> nullspace(Matrix m, u64 p) {
    // Reduced echelon form, scalar arithmetic; fine for the small systems
    // this is used on.
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank) std::swap_ranges(m.row(piv), m.row(piv) + m.cols, m.row(rank));
        u64 inv = fp::inv_mod(m.at(rank, col), p);
        for (std::size_t c = col; c < m.cols; ++c) m.at(rank, c) = fp::mul_mod(m.at(rank, c), inv, p);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            u64 f = m.at(r, col);
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = fp::sub_mod(m.at(r, c), fp::mul_mod(f, m.at(rank, c), p), p);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<u64>> basis;
    for (std::size_t free_c = 0; free_c < m.cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<u64> v(m.cols, 0);
        v[free_c] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = fp::neg_mod(m.at(r, free_c), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<u64> mat_vec(const Matrix& m, const std::vector<u64>& x, u64 p) {
    std::vector<u64> out(m.rows, 0);
    for (std::size_t r = 0; r < m.rows; ++r) {
        u64 acc = 0;
        const u64* row = m.row(r);
        for (std::size_t c = 0; c < m.cols; ++c)
            acc = fp::add_mod(acc, fp::mul_mod(row[c], x[c] % p, p), p);
        out[r] = acc;
    }
    return out;
}

}  // namespace nonef
