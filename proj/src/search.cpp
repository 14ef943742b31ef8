#include "sidonlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "sidonlab/verify.hpp"

namespace sidonlab::search {

namespace {

using Clock = std::chrono::steady_clock;

constexpr Int kNoCap = std::numeric_limits<Int>::max() / 4;
constexpr Int kOracleCap = 25;  // brute force enumerates at most 2^25 subsets

// ---------------------------------------------------------------------------
// Abort control shared by all workers of one search.

struct AbortControl {
    std::optional<Clock::time_point> deadline;
    std::uint64_t node_limit = 0;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};

    void configure(const Config& config) {
        if (config.time_budget_secs)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(*config.time_budget_secs));
        node_limit = config.node_limit;
    }

    // Batched: called every few thousand nodes per worker.
    void add_nodes(std::uint64_t n) {
        std::uint64_t total = nodes.fetch_add(n, std::memory_order_relaxed) + n;
        if (node_limit && total > node_limit) aborted.store(true, std::memory_order_relaxed);
        if (deadline && Clock::now() > *deadline) aborted.store(true, std::memory_order_relaxed);
    }

    bool stop() const { return aborted.load(std::memory_order_relaxed); }
};

// ---------------------------------------------------------------------------
// Word-parallel position mask for the Sidon (g = 2) ruler engine.

struct Words {
    std::vector<std::uint64_t> w;

    void resize_bits(Int bits) { w.assign(static_cast<std::size_t>((bits >> 6) + 1), 0); }
    bool test(Int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(Int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void clear(Int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void zero() { std::fill(w.begin(), w.end(), 0); }

    // dst |= (*this << shift)
    void or_shifted_into(Words& dst, Int shift) const {
        const int wo = static_cast<int>(shift >> 6);
        const int bo = static_cast<int>(shift & 63);
        const int n = static_cast<int>(w.size());
        const int dn = static_cast<int>(dst.w.size());
        for (int i = 0; i < n && i + wo < dn; ++i) {
            if (w[i] == 0) continue;
            dst.w[i + wo] |= w[i] << bo;
            if (bo && i + wo + 1 < dn) dst.w[i + wo + 1] |= w[i] >> (64 - bo);
        }
    }

    // Smallest clear bit in [from, to], or -1.
    Int next_zero(Int from, Int to) const {
        if (from > to) return -1;
        Int wi = from >> 6;
        const Int wlast = to >> 6;
        std::uint64_t cur = ~w[wi] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (cur) {
                Int v = (wi << 6) + __builtin_ctzll(cur);
                return v <= to ? v : -1;
            }
            if (++wi > wlast) return -1;
            cur = ~w[wi];
        }
    }
};

// ---------------------------------------------------------------------------
// Minimal-diameter cache per (h, g), with composed lower bounds beyond the
// exactly known prefix: any (a+b)-element set splits into an a-prefix and a
// b-suffix separated by at least one step.

class MinDiamCache {
public:
    static MinDiamCache& get() {
        static MinDiamCache cache;
        return cache;
    }

    std::optional<Int> exact(int h, Int g, int k) {
        std::lock_guard<std::mutex> lock(mu_);
        auto& v = exact_[{h, g}];
        if (k < static_cast<int>(v.size())) return v[k];
        return std::nullopt;
    }

    void record(int h, Int g, int k, Int diam) {
        std::lock_guard<std::mutex> lock(mu_);
        auto& v = exact_[{h, g}];
        if (v.empty()) v = {0, 0};  // k = 0, 1 have diameter 0
        if (k == static_cast<int>(v.size())) v.push_back(diam);
    }

    // Lower bounds lb[0..upto]; lb[j] exact where known.
    std::vector<Int> lb_vector(int h, Int g, int upto) {
        std::vector<Int> known;
        {
            std::lock_guard<std::mutex> lock(mu_);
            known = exact_[{h, g}];
        }
        if (known.empty()) known = {0, 0};
        std::vector<Int> lb(upto + 1, 0);
        for (int j = 0; j <= upto; ++j) {
            if (j < static_cast<int>(known.size())) {
                lb[j] = known[j];
            } else if (j == 2) {
                lb[j] = 1;
            } else {
                Int best = j >= 2 ? 1 : 0;
                for (int a = 1; a < j; ++a) best = std::max(best, lb[a] + lb[j - a] + 1);
                lb[j] = best;
            }
        }
        return lb;
    }

private:
    std::mutex mu_;
    std::map<std::pair<int, Int>, std::vector<Int>> exact_;
};

std::vector<Int> make_lb(int h, Int g, int upto, const Config& config) {
    if (config.minlen_bounds) return MinDiamCache::get().lb_vector(h, g, upto);
    std::vector<Int> lb(upto + 1, 0);
    for (int j = 2; j <= upto; ++j) lb[j] = j - 1;  // distinct integers
    return lb;
}

// ---------------------------------------------------------------------------
// Ruler engine for h = 2: minimal-diameter optimization, exhaustive witness
// enumeration, and fixed-cap existence decisions. The g = 2 case keeps a
// difference bitset and scans candidates through a word-parallel banned
// mask; g > 2 keeps a dense pair-sum count array.

struct RulerShared {
    std::atomic<Int> dcap{0};
    std::atomic<int> task_index{0};
    std::atomic<bool> found{false};  // decision mode
    std::mutex mu;
    Int best_diam = kNoCap;
    std::vector<Int> best_marks;
    std::set<std::vector<Int>> all_witnesses;
    std::set<int> tasks_done;
    Stats totals;
    Clock::time_point last_checkpoint = Clock::now();
};

enum class Phase { kOptimize, kEnumerate, kDecide };

class RulerEngine {
public:
    RulerEngine(int k, Int g, const Config& config, AbortControl& abort)
        : k_(k), g_(g), config_(config), abort_(&abort) {}

    // Phase entry. `frontier_cap` fixes the task decomposition (persisted in
    // checkpoints so task ids stay stable across resumes); `start_dcap` is
    // the live candidate cap (incumbent - 1 for optimization, the target
    // diameter otherwise).
    void run(Phase phase, Int frontier_cap, Int start_dcap, RulerShared& shared) {
        phase_ = phase;
        shared_ = &shared;
        frontier_cap_ = frontier_cap;
        shared.dcap.store(std::min(start_dcap, frontier_cap));
        lb_ = make_lb(2, g_, k_, config_);

        const int depth = std::max(0, std::min(k_ - 2, 3));
        auto tasks = frontier(depth);
        shared.task_index.store(0);

        int nworkers = std::max(1, config_.workers);
        if (tasks.size() <= 1) nworkers = 1;
        if (nworkers == 1) {
            worker(tasks);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(nworkers);
            for (int t = 0; t < nworkers; ++t)
                pool.emplace_back([&] { worker(tasks); });
            for (auto& th : pool) th.join();
        }
    }

    // Breadth-first feasible prefixes (marks after the root 0) of `depth`,
    // generated against frontier_cap_ so the list is deterministic.
    std::vector<std::vector<Int>> frontier(int depth) {
        const Int cap = frontier_cap_;
        std::vector<std::vector<Int>> cur{{}};
        for (int level = 0; level < depth; ++level) {
            std::vector<std::vector<Int>> next;
            for (const auto& prefix : cur) {
                State st(k_, g_, cap);
                for (Int m : prefix) st.place(m);
                const int idx = static_cast<int>(prefix.size()) + 1;
                Int lo = std::max(st.last() + 1, lb_[idx]);
                Int ub = cap - lb_[k_ - idx];
                if (config_.symmetry_breaking && idx == 1 &&
                    (phase_ == Phase::kOptimize || phase_ == Phase::kDecide))
                    ub = std::min(ub, cap / 2);
                for (Int v = lo; v <= ub; ++v) {
                    if (!st.feasible(v)) continue;
                    auto child = prefix;
                    child.push_back(v);
                    next.push_back(std::move(child));
                }
            }
            cur = std::move(next);
        }
        return cur;
    }

private:
    // Backing state: difference bitset (g = 2) or pair-sum counts.
    struct State {
        State(int k, Int g, Int cap) : g2(g == 2), g(g) {
            marks.reserve(k + 1);
            marks.push_back(0);
            if (g2) {
                diff.resize_bits(cap + 1);
                banned.resize_bits(cap + 1);
            } else {
                cnt.assign(static_cast<std::size_t>(2 * cap + 2), 0);
            }
        }

        Int last() const { return marks.back(); }

        bool feasible(Int v) const {
            if (g2) {
                for (auto it = marks.rbegin(); it != marks.rend(); ++it)
                    if (diff.test(v - *it)) return false;
                return true;
            }
            if (cnt[2 * v] + 1 > g) return false;
            for (Int m : marks)
                if (cnt[v + m] + 2 > g) return false;
            return true;
        }

        void place(Int v) {
            if (g2) {
                for (Int m : marks) diff.set(v - m);
            } else {
                for (Int m : marks) cnt[v + m] += 2;
                cnt[2 * v] += 1;
            }
            marks.push_back(v);
        }

        void unplace() {
            Int v = marks.back();
            marks.pop_back();
            if (g2) {
                for (Int m : marks) diff.clear(v - m);
            } else {
                for (Int m : marks) cnt[v + m] -= 2;
                cnt[2 * v] -= 1;
            }
        }

        // Recomputed per node: positions conflicting with current marks.
        void compute_banned() {
            banned.zero();
            for (Int m : marks) diff.or_shifted_into(banned, m);
        }

        bool g2;
        Int g;
        std::vector<Int> marks;
        Words diff;
        Words banned;
        std::vector<int32_t> cnt;
    };

    void worker(const std::vector<std::vector<Int>>& tasks) {
        State st(k_, g_, frontier_cap_);
        Stats local;
        while (!abort_->stop() && !early_stop()) {
            int id = shared_->task_index.fetch_add(1);
            if (id >= static_cast<int>(tasks.size())) break;
            {
                std::lock_guard<std::mutex> lock(shared_->mu);
                if (shared_->tasks_done.count(id)) continue;
            }
            for (Int m : tasks[id]) st.place(m);
            dfs(st, static_cast<int>(tasks[id].size()) + 1, local);
            for (std::size_t i = 0; i < tasks[id].size(); ++i) st.unplace();
            if (!abort_->stop()) task_done(id);
        }
        std::lock_guard<std::mutex> lock(shared_->mu);
        shared_->totals.nodes += local.nodes;
        shared_->totals.feasibility_prunes += local.feasibility_prunes;
        shared_->totals.bound_prunes += local.bound_prunes;
    }

    // First-witness and decision searches stop at the first leaf.
    bool early_stop() const {
        if (phase_ == Phase::kDecide) return shared_->found.load(std::memory_order_relaxed);
        if (phase_ == Phase::kEnumerate && config_.mode == Mode::kFirstWitness)
            return shared_->found.load(std::memory_order_relaxed);
        return false;
    }

    void dfs(State& st, int idx, Stats& local) {
        if ((++local.nodes & 0xfff) == 0) abort_->add_nodes(0x1000);
        if (abort_->stop() || early_stop()) return;

        const Int cap = shared_->dcap.load(std::memory_order_relaxed);
        Int lo = std::max(st.last() + 1, lb_[idx]);
        Int ub = cap - lb_[k_ - idx];
        if (config_.symmetry_breaking && idx == 1 &&
            (phase_ == Phase::kOptimize || phase_ == Phase::kDecide))
            ub = std::min(ub, cap / 2);
        const bool is_last = idx == k_ - 1;
        if (phase_ == Phase::kEnumerate && is_last) lo = std::max(lo, cap);
        if (lo > ub) {
            ++local.bound_prunes;
            return;
        }

        if (st.g2) {
            st.compute_banned();
            for (Int v = st.banned.next_zero(lo, ub); v != -1;
                 v = st.banned.next_zero(v + 1, ub)) {
                if (phase_ == Phase::kOptimize) {
                    Int live_cap = shared_->dcap.load(std::memory_order_relaxed);
                    if (v > live_cap - lb_[k_ - idx]) break;
                }
                step(st, idx, v, is_last, local);
                if (abort_->stop()) return;
            }
        } else {
            for (Int v = lo; v <= ub; ++v) {
                if (phase_ == Phase::kOptimize) {
                    Int live_cap = shared_->dcap.load(std::memory_order_relaxed);
                    if (v > live_cap - lb_[k_ - idx]) break;
                }
                if (!st.feasible(v)) {
                    ++local.feasibility_prunes;
                    continue;
                }
                step(st, idx, v, is_last, local);
                if (abort_->stop()) return;
            }
        }
    }

    void step(State& st, int idx, Int v, bool is_last, Stats& local) {
        if (is_last) {
            ++local.nodes;
            leaf(st, v);
            return;
        }
        st.place(v);
        dfs(st, idx + 1, local);
        st.unplace();
    }

    void leaf(State& st, Int v) {
        if (phase_ == Phase::kOptimize) {
            // v is a strict improvement: candidate caps enforce v <= dcap.
            Int cur = shared_->dcap.load();
            while (v - 1 < cur && !shared_->dcap.compare_exchange_weak(cur, v - 1)) {
            }
            std::lock_guard<std::mutex> lock(shared_->mu);
            if (v < shared_->best_diam) {
                shared_->best_diam = v;
                shared_->best_marks = st.marks;
                shared_->best_marks.push_back(v);
            }
        } else if (phase_ == Phase::kEnumerate) {
            std::vector<Int> w = st.marks;
            w.push_back(v);
            std::vector<Int> r(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) r[i] = v - w[w.size() - 1 - i];
            std::lock_guard<std::mutex> lock(shared_->mu);
            shared_->all_witnesses.insert(std::min(w, r));
            if (config_.mode == Mode::kFirstWitness) shared_->found.store(true);
        } else {
            std::lock_guard<std::mutex> lock(shared_->mu);
            shared_->found.store(true);
            shared_->best_diam = v;
            shared_->best_marks = st.marks;
            shared_->best_marks.push_back(v);
        }
    }

    void task_done(int id) {
        std::lock_guard<std::mutex> lock(shared_->mu);
        shared_->tasks_done.insert(id);
        if (!config_.checkpoint_path.empty() &&
            Clock::now() - shared_->last_checkpoint > std::chrono::seconds(1)) {
            shared_->last_checkpoint = Clock::now();
            if (checkpoint_writer) checkpoint_writer();
        }
    }

public:
    std::function<void()> checkpoint_writer;

private:
    int k_;
    Int g_;
    Config config_;
    AbortControl* abort_;
    Phase phase_ = Phase::kOptimize;
    Int frontier_cap_ = 0;
    RulerShared* shared_ = nullptr;
    std::vector<Int> lb_;
};

// ---------------------------------------------------------------------------
// Checkpoint file: versioned plain text, one key per line.

struct CheckpointData {
    int phase = 1;
    Int initial_cap = 0;
    Int incumbent = kNoCap;
    std::vector<Int> best;
    std::vector<std::vector<Int>> witnesses;
    std::set<int> done;
};

void write_checkpoint(const std::string& path, int k, Int g, const CheckpointData& data) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << "sidonlab-checkpoint 1\n";
        out << "problem shortest h=2 g=" << g << " k=" << k << "\n";
        out << "phase " << data.phase << "\n";
        out << "initial_cap " << data.initial_cap << "\n";
        out << "incumbent " << data.incumbent << "\n";
        if (!data.best.empty()) {
            out << "best";
            for (Int m : data.best) out << ' ' << m;
            out << "\n";
        }
        for (const auto& w : data.witnesses) {
            out << "witness";
            for (Int m : w) out << ' ' << m;
            out << "\n";
        }
        out << "done";
        for (int id : data.done) out << ' ' << id;
        out << "\nend\n";
    }
    std::rename(tmp.c_str(), path.c_str());
}

std::optional<CheckpointData> read_checkpoint(const std::string& path, int k, Int g) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != "sidonlab-checkpoint 1")
        throw CheckpointError("unrecognized checkpoint header");
    if (!std::getline(in, line)) throw CheckpointError("truncated checkpoint");
    {
        std::ostringstream expect;
        expect << "problem shortest h=2 g=" << g << " k=" << k;
        if (line != expect.str())
            throw CheckpointError("checkpoint is for a different problem: " + line);
    }
    CheckpointData data;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "phase") ls >> data.phase;
        else if (key == "initial_cap") ls >> data.initial_cap;
        else if (key == "incumbent") ls >> data.incumbent;
        else if (key == "best") {
            Int m;
            while (ls >> m) data.best.push_back(m);
        } else if (key == "witness") {
            std::vector<Int> w;
            Int m;
            while (ls >> m) w.push_back(m);
            data.witnesses.push_back(std::move(w));
        } else if (key == "done") {
            int id;
            while (ls >> id) data.done.insert(id);
        } else if (key == "end") {
            return data;
        }
    }
    throw CheckpointError("truncated checkpoint");
}

// ---------------------------------------------------------------------------
// General-h incremental convolution state for searches with h >= 3: dense
// ordered j-fold sum counts for j = 1..h over [0, range] (or mod n).

class ConvState {
public:
    ConvState(int h, Int g, Int range, Int modulus = 0)
        : h_(h), g_(g), mod_(modulus), size_(modulus ? modulus : h * range + 1), cnt_(h + 1) {
        for (int j = 1; j <= h; ++j) cnt_[j].assign(static_cast<std::size_t>(size_), 0);
        binom_.assign(h + 1, std::vector<Int>(h + 1, 0));
        for (int n = 0; n <= h; ++n) {
            binom_[n][0] = 1;
            for (int r = 1; r <= n; ++r)
                binom_[n][r] = binom_[n - 1][r - 1] + (r <= n - 1 ? binom_[n - 1][r] : 0);
        }
        delta_.assign(static_cast<std::size_t>(size_), 0);
    }

    const std::vector<Int>& elements() const { return elems_; }

    Int wrap(Int x) const { return mod_ ? x % mod_ : x; }

    bool can_add(Int m) {
        touched_.clear();
        bool ok = true;
        for (int i = 1; i <= h_ && ok; ++i) {
            const Int c = binom_[h_][i];
            if (i == h_) {
                ok = bump(wrap(h_ * m), c);
                break;
            }
            const auto& lower = cnt_[h_ - i];
            for (Int s = 0; s < size_ && ok; ++s) {
                if (lower[s] == 0) continue;
                ok = bump(wrap(s + i * m), c * lower[s]);
            }
        }
        for (Int kdx : touched_) delta_[kdx] = 0;
        return ok;
    }

    void add(Int m) {
        for (int j = h_; j >= 1; --j)
            for (int i = j; i >= 1; --i) {
                const Int c = binom_[j][i];
                if (i == j) {
                    cnt_[j][wrap(j * m)] += c;
                    continue;
                }
                const auto& lower = cnt_[j - i];
                for (Int s = 0; s < size_; ++s)
                    if (lower[s] != 0) cnt_[j][wrap(s + i * m)] += c * lower[s];
            }
        elems_.push_back(m);
    }

    void remove_last() {
        Int m = elems_.back();
        elems_.pop_back();
        // Mirror of add: restore low orders first so the subtracted terms
        // are computed against the original (pre-add) lower arrays.
        for (int j = 1; j <= h_; ++j)
            for (int i = j; i >= 1; --i) {
                const Int c = binom_[j][i];
                if (i == j) {
                    cnt_[j][wrap(j * m)] -= c;
                    continue;
                }
                const auto& lower = cnt_[j - i];
                for (Int s = 0; s < size_; ++s)
                    if (lower[s] != 0) cnt_[j][wrap(s + i * m)] -= c * lower[s];
            }
    }

private:
    bool bump(Int k, Int amount) {
        if (delta_[k] == 0) touched_.push_back(k);
        delta_[k] += amount;
        return cnt_[h_][k] + delta_[k] <= g_;
    }

    int h_;
    Int g_, mod_, size_;
    std::vector<std::vector<Int>> cnt_;
    std::vector<std::vector<Int>> binom_;
    std::vector<Int> delta_;
    std::vector<Int> touched_;
    std::vector<Int> elems_;
};

// ---------------------------------------------------------------------------

IntegerSet marks_to_set(const std::vector<Int>& marks) { return IntegerSet(marks); }

double elapsed_secs(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Greedy B*_2[g] extension from {0}: cheap valid upper-bound witness.
std::vector<Int> greedy_ruler(int k, Int g) {
    std::vector<Int> marks{0};
    std::vector<Int> cnt(64, 0);
    auto ensure = [&](Int s) {
        if (s >= static_cast<Int>(cnt.size())) cnt.resize(s + s / 2 + 1, 0);
    };
    Int v = 0;
    while (static_cast<int>(marks.size()) < k) {
        ++v;
        ensure(2 * v);
        bool ok = cnt[2 * v] + 1 <= g;
        for (Int m : marks)
            if (!(ok = ok && cnt[v + m] + 2 <= g)) break;
        if (!ok) continue;
        for (Int m : marks) cnt[v + m] += 2;
        cnt[2 * v] += 1;
        marks.push_back(v);
    }
    return marks;
}

// Shortest-diameter search for h >= 3 (desk scale, single-threaded).
struct GeneralShortest {
    int k, h;
    Int g;
    Config config;
    AbortControl* abort;
    std::vector<Int> lb;
    Int best = kNoCap;
    std::vector<Int> best_marks;
    std::set<std::vector<Int>> all;
    Stats stats;
    bool enumerate = false;
    Int fixed_cap = 0;

    void dfs(ConvState& st, std::vector<Int>& marks, int idx) {
        if ((++stats.nodes & 0x3ff) == 0) abort->add_nodes(0x400);
        if (abort->stop()) return;
        Int cap = enumerate ? fixed_cap : best - 1;
        Int lo = std::max(marks.back() + 1, lb[idx]);
        Int ub = cap - lb[k - idx];
        const bool is_last = idx == k - 1;
        if (enumerate && is_last) lo = std::max(lo, cap);
        for (Int v = lo; v <= ub; ++v) {
            if (!enumerate) {
                cap = best - 1;  // may have shrunk
                if (v > cap - lb[k - idx]) break;
            }
            if (!st.can_add(v)) {
                ++stats.feasibility_prunes;
                continue;
            }
            if (is_last) {
                marks.push_back(v);
                if (enumerate) {
                    std::vector<Int> r(marks.size());
                    for (std::size_t i = 0; i < marks.size(); ++i)
                        r[i] = v - marks[marks.size() - 1 - i];
                    all.insert(std::min(marks, r));
                } else if (v < best) {
                    best = v;
                    best_marks = marks;
                }
                marks.pop_back();
            } else {
                st.add(v);
                marks.push_back(v);
                dfs(st, marks, idx + 1);
                marks.pop_back();
                st.remove_last();
            }
            if (abort->stop()) return;
        }
    }
};

SearchResult shortest_bstar_h2(int k, Int g, const Config& config, AbortControl& abort);

// Ensures the (h, g) cache has exact diameters up to k-1; returns false on
// abort.
bool ensure_cache_below(int k, int h, Int g, const Config& config, AbortControl& abort);

SearchResult shortest_general(int k, int h, Int g, const Config& config, AbortControl& abort) {
    auto start = Clock::now();
    SearchResult result;
    if (!ensure_cache_below(k, h, g, config, abort)) {
        result.exact = false;
        return result;
    }

    GeneralShortest gs;
    gs.k = k;
    gs.h = h;
    gs.g = g;
    gs.config = config;
    gs.abort = &abort;
    gs.lb = make_lb(h, g, k, config);

    // Seed incumbent from the greedy extension (h-fold counts via verify).
    {
        std::vector<Int> marks{0};
        Int v = 0;
        while (static_cast<int>(marks.size()) < k) {
            ++v;
            auto trial = marks;
            trial.push_back(v);
            if (verify::is_bstar(IntegerSet(trial), h, g)) marks.push_back(v);
        }
        gs.best = marks.back();
        gs.best_marks = marks;
    }

    auto cached = MinDiamCache::get().exact(h, g, k);
    if (cached) {
        gs.best = *cached;
    } else {
        ConvState st(h, g, gs.best, 0);
        st.add(0);
        std::vector<Int> marks{0};
        gs.dfs(st, marks, 1);
        if (abort.stop()) {
            result.optimum = gs.best;
            result.exact = false;
            result.witnesses.push_back(marks_to_set(gs.best_marks));
            result.stats = gs.stats;
            result.stats.wall_secs = elapsed_secs(start);
            return result;
        }
        MinDiamCache::get().record(h, g, k, gs.best);
    }

    result.optimum = gs.best;
    if (config.mode == Mode::kAllWitnesses) {
        gs.enumerate = true;
        gs.fixed_cap = gs.best;
        ConvState st(h, g, gs.best, 0);
        st.add(0);
        std::vector<Int> marks{0};
        gs.dfs(st, marks, 1);
        if (abort.stop()) result.exact = false;
        for (const auto& w : gs.all) result.witnesses.push_back(marks_to_set(w));
    } else if (config.mode == Mode::kFirstWitness) {
        if (!gs.best_marks.empty() && gs.best_marks.back() == gs.best) {
            result.witnesses.push_back(marks_to_set(gs.best_marks));
        } else {
            // Cached optimum without a stored witness: enumerate one.
            gs.enumerate = true;
            gs.fixed_cap = gs.best;
            ConvState st(h, g, gs.best, 0);
            st.add(0);
            std::vector<Int> marks{0};
            gs.dfs(st, marks, 1);
            if (!gs.all.empty()) result.witnesses.push_back(marks_to_set(*gs.all.begin()));
        }
    }
    result.stats = gs.stats;
    result.stats.wall_secs = elapsed_secs(start);
    result.exact = result.exact && !abort.stop();
    return result;
}

SearchResult shortest_bstar_h2(int k, Int g, const Config& config, AbortControl& abort) {
    auto start = Clock::now();
    SearchResult result;
    if (!ensure_cache_below(k, 2, g, config, abort)) {
        result.exact = false;
        return result;
    }

    std::optional<CheckpointData> resume;
    if (!config.checkpoint_path.empty())
        resume = read_checkpoint(config.checkpoint_path, k, g);

    auto seed = greedy_ruler(k, g);
    auto cached = MinDiamCache::get().exact(2, g, k);

    RulerShared shared;
    RulerEngine engine(k, g, config, abort);

    CheckpointData ck;
    ck.initial_cap = seed.back() - 1;

    bool need_optimize = !cached.has_value();
    Int optimum = cached.value_or(kNoCap);

    if (resume && resume->phase == 2) {
        need_optimize = false;
        optimum = resume->initial_cap;
        MinDiamCache::get().record(2, g, k, optimum);
    }

    if (need_optimize) {
        shared.best_diam = seed.back();
        shared.best_marks = seed;
        if (resume && resume->phase == 1) {
            ck.initial_cap = resume->initial_cap;
            shared.tasks_done = resume->done;
            if (!resume->best.empty() && resume->incumbent < shared.best_diam) {
                shared.best_diam = resume->incumbent;
                shared.best_marks = resume->best;
            }
        }
        if (!config.checkpoint_path.empty()) {
            engine.checkpoint_writer = [&] {
                CheckpointData data;
                data.phase = 1;
                data.initial_cap = ck.initial_cap;
                data.incumbent = shared.best_diam;
                data.best = shared.best_marks;
                data.done = shared.tasks_done;
                write_checkpoint(config.checkpoint_path, k, g, data);
            };
        }
        engine.run(Phase::kOptimize, ck.initial_cap, shared.best_diam - 1, shared);
        result.stats = shared.totals;
        if (abort.stop()) {
            result.optimum = shared.best_diam;
            result.exact = false;
            result.witnesses.push_back(marks_to_set(shared.best_marks));
            result.stats.wall_secs = elapsed_secs(start);
            if (engine.checkpoint_writer) engine.checkpoint_writer();
            return result;
        }
        optimum = shared.best_diam;
        MinDiamCache::get().record(2, g, k, optimum);
    }

    result.optimum = optimum;

    if (config.mode == Mode::kAllWitnesses ||
        (config.mode == Mode::kFirstWitness && shared.best_marks.empty())) {
        RulerShared shared2;
        shared2.best_diam = optimum;
        if (resume && resume->phase == 2) {
            shared2.tasks_done = resume->done;
            for (const auto& w : resume->witnesses) shared2.all_witnesses.insert(w);
        }
        RulerEngine enumerator(k, g, config, abort);
        if (!config.checkpoint_path.empty()) {
            enumerator.checkpoint_writer = [&] {
                CheckpointData data;
                data.phase = 2;
                data.initial_cap = optimum;
                data.incumbent = optimum;
                data.done = shared2.tasks_done;
                data.witnesses.assign(shared2.all_witnesses.begin(),
                                      shared2.all_witnesses.end());
                write_checkpoint(config.checkpoint_path, k, g, data);
            };
            if (!(resume && resume->phase == 2) && enumerator.checkpoint_writer)
                enumerator.checkpoint_writer();  // mark the phase switch
        }
        enumerator.run(Phase::kEnumerate, optimum, optimum, shared2);
        result.stats.nodes += shared2.totals.nodes;
        result.stats.feasibility_prunes += shared2.totals.feasibility_prunes;
        result.stats.bound_prunes += shared2.totals.bound_prunes;
        if (abort.stop()) {
            result.exact = false;
            if (enumerator.checkpoint_writer) enumerator.checkpoint_writer();
        }
        if (config.mode == Mode::kAllWitnesses) {
            for (const auto& w : shared2.all_witnesses)
                result.witnesses.push_back(marks_to_set(w));
        } else if (!shared2.all_witnesses.empty()) {
            result.witnesses.push_back(marks_to_set(*shared2.all_witnesses.begin()));
        }
    } else if (config.mode == Mode::kFirstWitness) {
        result.witnesses.push_back(marks_to_set(shared.best_marks));
    }

    result.stats.wall_secs = elapsed_secs(start);
    if (result.exact && !config.checkpoint_path.empty())
        std::remove(config.checkpoint_path.c_str());
    return result;
}

bool ensure_cache_below(int k, int h, Int g, const Config& config, AbortControl& abort) {
    auto& cache = MinDiamCache::get();
    for (int j = 2; j < k; ++j) {
        if (cache.exact(h, g, j)) continue;
        Config sub = config;
        sub.mode = Mode::kCountOnly;
        sub.checkpoint_path.clear();
        if (h == 2) {
            auto r = shortest_bstar_h2(j, g, sub, abort);
            if (!r.exact) return false;
        } else {
            auto r = shortest_general(j, h, g, sub, abort);
            if (!r.exact) return false;
        }
    }
    return !abort.stop();
}

}  // namespace

// ---------------------------------------------------------------------------

SearchResult shortest_bstar(int k, int h, Int g, const Config& config) {
    if (k < 2) throw Error("shortest_bstar: k must be >= 2");
    if (h < 2 || g < 1) throw Error("shortest_bstar: need h >= 2, g >= 1");
    AbortControl abort;
    abort.configure(config);
    if (h == 2) return shortest_bstar_h2(k, g, config, abort);
    if (!config.checkpoint_path.empty())
        throw CheckpointError("checkpointing is only supported for h = 2 searches");
    return shortest_general(k, h, g, config, abort);
}

SearchResult shortest_sidon(int k, const Config& config) {
    Config c = config;
    if (config.mode == Mode::kFirstWitness) c.mode = Mode::kAllWitnesses;
    return shortest_bstar(k, 2, 2, c);
}

Int min_n_for_size(int h, Int g, int k, const Config& config) {
    if (k < 1) throw Error("min_n_for_size: k must be >= 1");
    if (k == 1) return 1;
    Config sub = config;
    sub.mode = Mode::kCountOnly;
    auto r = shortest_bstar(k, h, g, sub);
    if (!r.exact) throw TimeBudgetExceededError("min_n_for_size: budget exhausted");
    return r.optimum + 1;
}

bool exists_bstar_subset(Int n, Int g, int k, Stats* stats, const Config& config) {
    if (k < 1) return true;
    if (k == 1) return n >= 1;
    if (n < k) return false;
    AbortControl abort;
    abort.configure(config);
    RulerShared shared;
    Config c = config;
    c.checkpoint_path.clear();
    RulerEngine engine(k, g, c, abort);
    engine.run(Phase::kDecide, n - 1, n - 1, shared);
    if (abort.stop() && !shared.found.load())
        throw TimeBudgetExceededError("exists_bstar_subset: budget exhausted");
    if (stats) {
        *stats = shared.totals;
    }
    return shared.found.load();
}

// ---------------------------------------------------------------------------
// R_h(g,n) and C_h(g,n).

namespace {

struct MaxSearch {
    Int n;
    int h;
    Int g;
    Config config;
    AbortControl* abort;
    Int modulus = 0;  // 0 = integer problem on [1, n]
    std::vector<Int> lb;      // integer problem only
    std::vector<Int> maxfit;  // maxfit[len] = max j with lb[j] <= len
    Int best = 0;
    std::vector<Int> best_set;
    std::vector<std::vector<Int>> all;
    Int size_cap = kNoCap;
    Stats stats;

    bool collect_all() const { return config.mode == Mode::kAllWitnesses; }

    Int remaining_bound(Int last, Int cur_size) const {
        if (modulus) {
            Int rem = modulus - 1 - last;
            return std::min(rem, size_cap - cur_size);
        }
        Int len = n - last - 1;
        if (len < 0) return 0;
        Int idx = std::min<Int>(len, static_cast<Int>(maxfit.size()) - 1);
        return maxfit[idx];
    }

    void record(const std::vector<Int>& set) {
        Int size = static_cast<Int>(set.size());
        if (size > best) {
            best = size;
            best_set = set;
            if (collect_all()) all.clear();
        }
        if (collect_all() && size == best) all.push_back(set);
    }

    // h = 2 path: dense pair-sum counts (mod n for modular problems).
    void run_h2() {
        std::vector<int32_t> cnt(static_cast<std::size_t>(modulus ? modulus : 2 * n + 2), 0);
        std::vector<Int> set;
        if (modulus) {
            set.push_back(0);
            cnt[0] += 1;  // 0 + 0
            record(set);
            dfs2(cnt, set, 1);
        } else {
            record(set);
            dfs2(cnt, set, 1);
        }
    }

    bool feasible2(const std::vector<int32_t>& cnt, const std::vector<Int>& set, Int v) const {
        Int dbl = modulus ? (2 * v) % modulus : 2 * v;
        if (cnt[dbl] + 1 > g) return false;
        for (Int m : set) {
            Int s = modulus ? (v + m) % modulus : v + m;
            if (cnt[s] + 2 > g) return false;
        }
        return true;
    }

    void dfs2(std::vector<int32_t>& cnt, std::vector<Int>& set, Int from) {
        if ((++stats.nodes & 0xfff) == 0) abort->add_nodes(0x1000);
        if (abort->stop()) return;
        const Int limit = modulus ? modulus - 1 : n;
        for (Int v = from; v <= limit; ++v) {
            Int sz = static_cast<Int>(set.size());
            Int bound = sz + 1 + remaining_bound(v, sz + 1);
            if (collect_all() ? bound < best : bound <= best) {
                ++stats.bound_prunes;
                break;  // later v only shrinks the bound
            }
            if (modulus && config.symmetry_breaking && !collect_all() && sz >= 2) {
                Int first_gap = set[1];
                if (v - set.back() < first_gap || v > modulus - first_gap) continue;
            }
            if (!feasible2(cnt, set, v)) {
                ++stats.feasibility_prunes;
                continue;
            }
            for (Int m : set) cnt[modulus ? (v + m) % modulus : v + m] += 2;
            cnt[modulus ? (2 * v) % modulus : 2 * v] += 1;
            set.push_back(v);
            record(set);
            dfs2(cnt, set, v + 1);
            set.pop_back();
            for (Int m : set) cnt[modulus ? (v + m) % modulus : v + m] -= 2;
            cnt[modulus ? (2 * v) % modulus : 2 * v] -= 1;
            if (abort->stop()) return;
        }
    }

    // General h path.
    void run_general() {
        ConvState st(h, g, modulus ? 0 : n, modulus);
        std::vector<Int> set;
        if (modulus) {
            st.add(0);
            set.push_back(0);
            record(set);
        } else {
            record(set);
        }
        dfsg(st, set, modulus ? 1 : 1);
    }

    void dfsg(ConvState& st, std::vector<Int>& set, Int from) {
        if ((++stats.nodes & 0x3ff) == 0) abort->add_nodes(0x400);
        if (abort->stop()) return;
        const Int limit = modulus ? modulus - 1 : n;
        for (Int v = from; v <= limit; ++v) {
            Int sz = static_cast<Int>(set.size());
            Int bound = sz + 1 + remaining_bound(v, sz + 1);
            if (collect_all() ? bound < best : bound <= best) {
                ++stats.bound_prunes;
                break;
            }
            if (!st.can_add(v)) {
                ++stats.feasibility_prunes;
                continue;
            }
            st.add(v);
            set.push_back(v);
            record(set);
            dfsg(st, set, v + 1);
            set.pop_back();
            st.remove_last();
            if (abort->stop()) return;
        }
    }
};

}  // namespace

SearchResult max_bstar_subset(Int n, int h, Int g, const Config& config) {
    if (n < 1) throw Error("max_bstar_subset: n must be >= 1");
    if (h < 2 || g < 1) throw Error("max_bstar_subset: need h >= 2, g >= 1");
    auto start = Clock::now();
    AbortControl abort;
    abort.configure(config);

    MaxSearch ms;
    ms.n = n;
    ms.h = h;
    ms.g = g;
    ms.config = config;
    ms.abort = &abort;
    if (config.minlen_bounds) {
        // Cheap static bounds only: do not trigger recursive searches here.
        ms.lb = MinDiamCache::get().lb_vector(h, g, static_cast<int>(std::min<Int>(n + 1, 64)));
    } else {
        ms.lb.assign(static_cast<std::size_t>(std::min<Int>(n + 1, 64)) + 1, 0);
        for (std::size_t j = 2; j < ms.lb.size(); ++j) ms.lb[j] = static_cast<Int>(j) - 1;
    }
    ms.maxfit.assign(static_cast<std::size_t>(n + 1), 0);
    for (Int len = 0; len <= n; ++len) {
        Int j = 0;
        while (j + 1 < static_cast<Int>(ms.lb.size()) && ms.lb[j + 1] <= len) ++j;
        ms.maxfit[len] = j;
    }

    if (h == 2)
        ms.run_h2();
    else
        ms.run_general();

    SearchResult result;
    result.optimum = ms.best;
    result.exact = !abort.stop();
    result.stats = ms.stats;
    result.stats.wall_secs = elapsed_secs(start);
    if (config.mode == Mode::kAllWitnesses) {
        for (auto& w : ms.all) result.witnesses.push_back(IntegerSet(w));
    } else if (config.mode == Mode::kFirstWitness && !ms.best_set.empty()) {
        result.witnesses.push_back(IntegerSet(ms.best_set));
    }
    return result;
}

SearchResult max_modular(Int n, int h, Int g, const Config& config) {
    if (n < 1) throw Error("max_modular: n must be >= 1");
    if (h < 2 || g < 1) throw Error("max_modular: need h >= 2, g >= 1");
    auto start = Clock::now();
    AbortControl abort;
    abort.configure(config);

    SearchResult result;
    if (n == 1) {
        result.optimum = 1;
        result.modular_witnesses.push_back(ModularSet(1, {0}));
        return result;
    }

    MaxSearch ms;
    ms.n = n;
    ms.h = h;
    ms.g = g;
    ms.config = config;
    ms.abort = &abort;
    ms.modulus = n;
    if (h == 2)
        ms.size_cap = static_cast<Int>(std::sqrt(static_cast<double>(g) * n)) + 1;

    if (h == 2)
        ms.run_h2();
    else
        ms.run_general();

    result.optimum = ms.best;
    result.exact = !abort.stop();
    result.stats = ms.stats;
    result.stats.wall_secs = elapsed_secs(start);
    if (config.mode == Mode::kAllWitnesses) {
        for (auto& w : ms.all) result.modular_witnesses.push_back(ModularSet(n, w));
    } else if (config.mode == Mode::kFirstWitness && !ms.best_set.empty()) {
        result.modular_witnesses.push_back(ModularSet(n, ms.best_set));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Brute-force oracles: all subsets, feasibility checked by a full recount
// through the verify module.

namespace {

struct Oracle {
    Int n;
    int h;
    Int g;
    Int modulus = 0;
    Int best = 0;
    std::vector<Int> best_set;
    Stats stats;

    void dfs(std::vector<Int>& set, Int from) {
        ++stats.nodes;
        if (static_cast<Int>(set.size()) > best) {
            best = static_cast<Int>(set.size());
            best_set = set;
        }
        const Int limit = modulus ? modulus - 1 : n;
        for (Int v = from; v <= limit; ++v) {
            set.push_back(v);
            bool ok = modulus ? verify::is_bstar_mod(set, h, g, modulus)
                              : verify::is_bstar(IntegerSet(set), h, g);
            if (ok)
                dfs(set, v + 1);
            else
                ++stats.feasibility_prunes;
            set.pop_back();
        }
    }
};

}  // namespace

SearchResult brute_force_oracle(Int n, int h, Int g) {
    if (n > kOracleCap) throw CapExceededError("brute_force_oracle: space above 2^25 subsets");
    auto start = Clock::now();
    Oracle o{n, h, g};
    std::vector<Int> set;
    o.dfs(set, 1);
    SearchResult r;
    r.optimum = o.best;
    r.witnesses.push_back(IntegerSet(o.best_set));
    r.stats = o.stats;
    r.stats.wall_secs = elapsed_secs(start);
    return r;
}

SearchResult brute_force_oracle_mod(Int n, int h, Int g) {
    if (n > kOracleCap)
        throw CapExceededError("brute_force_oracle_mod: space above 2^25 subsets");
    auto start = Clock::now();
    Oracle o{n, h, g};
    o.modulus = n;
    std::vector<Int> set;
    o.dfs(set, 0);
    SearchResult r;
    r.optimum = o.best;
    r.modular_witnesses.push_back(ModularSet(n, o.best_set));
    r.stats = o.stats;
    r.stats.wall_secs = elapsed_secs(start);
    return r;
}

}  // namespace sidonlab::search
