#pragma once

// Dense matrices over F_p and the modular Gaussian elimination behind rank
// certificates.  Pivoting is by first nonzero entry, so the elimination is
// deterministic; row updates are independent, so the block-parallel path
// returns bit-identical results for every thread count.

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace nonef {

using u64 = std::uint64_t;

struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<u64> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    u64* row(std::size_t r) { return a.data() + r * cols; }
    const u64* row(std::size_t r) const { return a.data() + r * cols; }
    u64& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    u64 at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// Persistent worker pool with a static partition: parallel_for(b, e, f)
// calls f on disjoint contiguous subranges covering [b, e).
class ThreadPool {
  public:
    explicit ThreadPool(unsigned threads);
    ~ThreadPool();

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    unsigned threads() const { return nthreads_; }
    void parallel_for(std::size_t begin, std::size_t end,
                      const std::function<void(std::size_t, std::size_t)>& chunk);

    // Shared pool sized from NONEF_THREADS (default: hardware concurrency,
    // clamped to 8).
    static ThreadPool& shared();

  private:
    void worker(unsigned self);

    unsigned nthreads_;
    std::vector<std::thread> workers_;
    std::mutex mu_;
    std::condition_variable cv_work_, cv_done_;
    std::uint64_t generation_ = 0;
    unsigned pending_ = 0;
    bool stop_ = false;
    std::size_t job_begin_ = 0, job_end_ = 0;
    const std::function<void(std::size_t, std::size_t)>* job_ = nullptr;
};

// In-place row echelon reduction; returns the rank.  Destroys `m`.
std::size_t rank_destructive(Matrix& m, u64 p, ThreadPool* pool = nullptr);

std::size_t rank_of(Matrix m, u64 p, ThreadPool* pool = nullptr);

// Basis of the right kernel {x : m x = 0}.  Small-matrix utility (scalar
// path only); used for implicitization and witness constructions.
std::vector<std::vector<u64>> nullspace(Matrix m, u64 p);

// m * x mod p.
std::vector<u64> mat_vec(const Matrix& m, const std::vector<u64>& x, u64 p);

}  // namespace nonef
